#pragma once

#include <span>
#include <vector>

namespace relia::metrics {

struct SpearmanResult {
    double value = 0.0;
    bool degenerate = false;  // either input constant: correlation undefined, reported as 0
};

/// Average ranks (1-based); ties share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> v);

/// Spearman rank correlation: Pearson correlation of average ranks. Returns
/// 0 with the degenerate flag set when either vector is constant.
SpearmanResult spearman_rho(std::span<const double> a, std::span<const double> b);

}  // namespace relia::metrics
