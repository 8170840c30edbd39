#pragma once

#include <cstdint>

#include "relia/dataset.hpp"

namespace relia::data {

/// Stand-in for the real unbalanced use-case data: a two-class Gaussian
/// mixture where only the unbalance regime and class overlap matter.
struct SyntheticSpec {
    std::size_t n_points = 10000;
    std::size_t m_features = 8;
    double minority_freq = 0.01;  // in (0, 0.5)
    std::size_t n_groups = 50;
    double separation = 4.0;  // distance between class means; 0 = full overlap
    std::uint64_t seed = 0;
};

/// Two Gaussian components per class; the minority components sit at
/// `separation` along a fixed direction from the majority ones. The minority
/// count is exactly round(n * minority_freq), placement shuffled by seed.
/// Group keys are Voronoi cells of random spatial block centers, so groups
/// carry real spatial information.
Dataset generate_synthetic(const SyntheticSpec& spec);

}  // namespace relia::data
