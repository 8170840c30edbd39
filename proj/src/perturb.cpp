#include "relia/perturb.hpp"

#include <algorithm>
#include <random>

#include "relia/errors.hpp"

namespace relia::nbhd {

double sample_beta(double a, double b, Rng& rng) {
    if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("beta: shape parameters must be positive");
    std::gamma_distribution<double> ga(a, 1.0);
    std::gamma_distribution<double> gb(b, 1.0);
    const double x = ga(rng);
    const double y = gb(rng);
    return x / (x + y);
}

std::vector<double> sample_mixing_coefficients(double lambda, std::size_t m, Rng& rng) {
    if (!(lambda > 0.0) || !(lambda < 1.0)) throw ConfigError("perturb: lambda must lie in (0,1)");
    std::vector<double> out(m);
    for (double& v : out) v = sample_beta(100.0 * lambda, 100.0 * (1.0 - lambda), rng);
    return out;
}

std::vector<double> interpolate_toward(std::span<const double> x, std::span<const double> x_mix,
                                       std::span<const double> mixing) {
    if (x.size() != x_mix.size() || x.size() != mixing.size())
        throw ConfigError("perturb: vector length mismatch");
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double v = x[j] + mixing[j] * (x_mix[j] - x[j]);
        const double lo = std::min(x[j], x_mix[j]);
        const double hi = std::max(x[j], x_mix[j]);
        out[j] = std::clamp(v, lo, hi);
    }
    return out;
}

std::vector<double> perturb_once(std::span<const double> x, std::span<const double> x_mix,
                                 double lambda, Rng& rng, bool per_point_lambda) {
    if (per_point_lambda) {
        if (!(lambda > 0.0) || !(lambda < 1.0))
            throw ConfigError("perturb: lambda must lie in (0,1)");
        const double shared = sample_beta(100.0 * lambda, 100.0 * (1.0 - lambda), rng);
        std::vector<double> mixing(x.size(), shared);
        return interpolate_toward(x, x_mix, mixing);
    }
    return interpolate_toward(x, x_mix, sample_mixing_coefficients(lambda, x.size(), rng));
}

}  // namespace relia::nbhd
