#include "relia/radam.hpp"

#include <cmath>

#include "relia/errors.hpp"

namespace relia::net {

RAdam::RAdam(std::size_t n_params, const RAdamParams& params) : params_(params) {
    if (!(params.beta1 >= 0.0 && params.beta1 < 1.0) || !(params.beta2 >= 0.0 && params.beta2 < 1.0))
        throw ConfigError("radam: betas must lie in [0,1)");
    if (params.learning_rate < 0.0) throw ConfigError("radam: learning rate must be >= 0");
    rho_inf_ = 2.0 / (1.0 - params.beta2) - 1.0;
    m_.assign(n_params, 0.0);
    v_.assign(n_params, 0.0);
}

void RAdam::step(std::vector<double>& theta, const std::vector<double>& grad) {
    if (theta.size() != m_.size() || grad.size() != m_.size())
        throw ConfigError("radam: parameter/gradient size mismatch");
    ++t_;
    const double b1 = params_.beta1, b2 = params_.beta2;
    const double b1t = std::pow(b1, static_cast<double>(t_));
    const double b2t = std::pow(b2, static_cast<double>(t_));
    const double bias1 = 1.0 - b1t;
    const double bias2 = 1.0 - b2t;
    const double rho_t = rho_inf_ - 2.0 * static_cast<double>(t_) * b2t / bias2;

    const bool rectified = rho_t > 4.0;
    double rect = 0.0;
    if (rectified)
        rect = std::sqrt(((rho_t - 4.0) * (rho_t - 2.0) * rho_inf_) /
                         ((rho_inf_ - 4.0) * (rho_inf_ - 2.0) * rho_t));

    for (std::size_t i = 0; i < theta.size(); ++i) {
        m_[i] = b1 * m_[i] + (1.0 - b1) * grad[i];
        v_[i] = b2 * v_[i] + (1.0 - b2) * grad[i] * grad[i];
        const double m_hat = m_[i] / bias1;
        if (rectified) {
            const double v_hat = std::sqrt(v_[i] / bias2);
            theta[i] -= params_.learning_rate * rect * m_hat / (v_hat + params_.epsilon);
        } else {
            theta[i] -= params_.learning_rate * m_hat;
        }
    }
}

}  // namespace relia::net
