#include "relia/focal_loss.hpp"

#include <algorithm>
#include <cmath>

#include "relia/errors.hpp"

namespace relia::net {

namespace {

constexpr double kClamp = 1e-7;

void check_params(const FocalLossParams& params) {
    if (params.gamma < 0.0) throw ConfigError("focal: gamma must be >= 0");
    if (!(params.alpha > 0.0) || !(params.alpha < 1.0))
        throw ConfigError("focal: alpha must lie in (0,1)");
}

}  // namespace

double focal_loss(double p, int y, const FocalLossParams& params) {
    check_params(params);
    const double p_true = y == 1 ? p : 1.0 - p;
    const double p_t = std::clamp(p_true, kClamp, 1.0 - kClamp);
    const double alpha_t = y == 1 ? params.alpha : 1.0 - params.alpha;
    return -alpha_t * std::pow(1.0 - p_t, params.gamma) * std::log(p_t);
}

double focal_loss_grad_p(double p, int y, const FocalLossParams& params) {
    check_params(params);
    const double p_true = y == 1 ? p : 1.0 - p;
    const double p_t = std::clamp(p_true, kClamp, 1.0 - kClamp);
    const double alpha_t = y == 1 ? params.alpha : 1.0 - params.alpha;
    const double q = 1.0 - p_t;
    const double d_pt = alpha_t * params.gamma * std::pow(q, params.gamma - 1.0) * std::log(p_t) -
                        alpha_t * std::pow(q, params.gamma) / p_t;
    return y == 1 ? d_pt : -d_pt;
}

}  // namespace relia::net
