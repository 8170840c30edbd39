#include "relia/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "relia/errors.hpp"
#include "relia/rng.hpp"

namespace relia::data {

Dataset generate_synthetic(const SyntheticSpec& spec) {
    if (spec.m_features == 0) throw ConfigError("synthetic: m_features must be positive");
    if (spec.n_points == 0) throw ConfigError("synthetic: n_points must be positive");
    if (!(spec.minority_freq > 0.0) || spec.minority_freq >= 0.5)
        throw ConfigError("synthetic: minority_freq must lie in (0, 0.5)");
    if (spec.n_groups == 0) throw ConfigError("synthetic: n_groups must be positive");
    if (spec.separation < 0.0) throw ConfigError("synthetic: separation must be >= 0");

    const std::size_t n = spec.n_points;
    const std::size_t m = spec.m_features;
    Rng rng(derive_seed(spec.seed, "synthetic"));
    std::normal_distribution<double> unit_normal(0.0, 1.0);

    // Class shift direction and within-class component spread direction.
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> shift(m), spread(m);
    for (std::size_t j = 0; j < m; ++j) {
        shift[j] = spec.separation * inv_sqrt_m;
        spread[j] = (j % 2 == 0 ? 1.5 : -1.5) * inv_sqrt_m;
    }

    std::vector<std::vector<double>> block_centers(spec.n_groups, std::vector<double>(m));
    for (auto& c : block_centers)
        for (double& v : c) v = 2.0 * unit_normal(rng);

    const std::size_t n_minority =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(
                                     static_cast<double>(n) * spec.minority_freq)));
    std::vector<int> labels(n, 0);
    std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n_minority), 1);
    std::shuffle(labels.begin(), labels.end(), rng);

    Dataset data;
    data.n_rows = n;
    data.n_features = m;
    data.labels = std::move(labels);
    data.features.resize(n * m);
    data.group_keys.resize(n);
    for (std::size_t j = 0; j < m; ++j) data.feature_names.push_back("f" + std::to_string(j));

    std::bernoulli_distribution component_pick(0.5);
    for (std::size_t i = 0; i < n; ++i) {
        const double comp_sign = component_pick(rng) ? 1.0 : -1.0;
        const bool minority = data.labels[i] == 1;
        for (std::size_t j = 0; j < m; ++j) {
            double v = comp_sign * spread[j] + unit_normal(rng);
            if (minority) v += shift[j];
            data.features[i * m + j] = v;
        }

        std::size_t best_block = 0;
        double best_d2 = 1e300;
        for (std::size_t k = 0; k < block_centers.size(); ++k) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double d = data.features[i * m + j] - block_centers[k][j];
                d2 += d * d;
            }
            if (d2 < best_d2) {
                best_d2 = d2;
                best_block = k;
            }
        }
        data.group_keys[i] = "g" + std::to_string(best_block);
    }
    return data;
}

}  // namespace relia::data
