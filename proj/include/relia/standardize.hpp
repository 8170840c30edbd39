#pragma once

#include <vector>

#include "relia/dataset.hpp"

namespace relia::data {

/// Per-feature location/scale fitted on the training rows. Population
/// convention: the standard deviation divides by N, not N-1.
struct StandardizationStats {
    std::vector<double> means;
    std::vector<double> std_devs;  // strictly positive

    std::size_t dim() const { return means.size(); }
};

/// Fits means and population standard deviations over fit_rows only.
/// Throws DataError if fit_rows is empty or a feature is constant over them.
StandardizationStats fit_standardize(const Dataset& data, const std::vector<std::size_t>& fit_rows);

/// Returns a copy of data with each feature j mapped to (x_j - mean_j) / std_j.
Dataset apply_standardize(const Dataset& data, const StandardizationStats& stats);

/// Inverse transform; apply then invert recovers inputs to ~1e-10 relative.
Dataset invert_standardize(const Dataset& data, const StandardizationStats& stats);

std::vector<double> standardize_row(std::span<const double> x, const StandardizationStats& stats);

}  // namespace relia::data
