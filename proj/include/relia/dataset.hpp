#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace relia::data {

/// Tabular dataset: N rows of m numeric features, binary labels and a group
/// key per row (the unit that must not straddle split boundaries).
struct Dataset {
    std::size_t n_rows = 0;
    std::size_t n_features = 0;
    std::vector<double> features;  // row-major, n_rows * n_features
    std::vector<int> labels;       // values in {0,1}
    std::vector<std::string> group_keys;
    std::vector<std::string> feature_names;

    double feature(std::size_t row, std::size_t col) const {
        return features[row * n_features + col];
    }
    std::span<const double> row(std::size_t i) const {
        return {features.data() + i * n_features, n_features};
    }

    std::size_t count_label(int label) const;

    /// Throws DataError if any structural invariant is violated.
    void validate() const;
};

/// Row subset as a dense matrix (used for split views).
struct Matrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<double> values;  // row-major

    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * n_cols, n_cols};
    }
};

Matrix gather_rows(const Dataset& data, const std::vector<std::size_t>& rows);

}  // namespace relia::data
