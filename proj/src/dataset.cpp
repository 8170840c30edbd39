#include "relia/dataset.hpp"

#include <cmath>

#include "relia/errors.hpp"

namespace relia::data {

std::size_t Dataset::count_label(int label) const {
    std::size_t n = 0;
    for (int y : labels)
        if (y == label) ++n;
    return n;
}

void Dataset::validate() const {
    if (features.size() != n_rows * n_features)
        throw DataError("dataset: feature matrix size does not match n_rows * n_features");
    if (labels.size() != n_rows)
        throw DataError("dataset: label count does not match row count");
    if (group_keys.size() != n_rows)
        throw DataError("dataset: group key count does not match row count");
    if (feature_names.size() != n_features)
        throw DataError("dataset: feature name count does not match feature count");
    for (std::size_t i = 0; i < n_rows; ++i) {
        if (labels[i] != 0 && labels[i] != 1)
            throw DataError("dataset: label outside {0,1} at row " + std::to_string(i));
        if (group_keys[i].empty())
            throw DataError("dataset: empty group key at row " + std::to_string(i));
    }
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (!std::isfinite(features[i]))
            throw DataError("dataset: non-finite feature value at row " +
                            std::to_string(i / n_features) + ", column " +
                            std::to_string(i % n_features));
    }
}

Matrix gather_rows(const Dataset& data, const std::vector<std::size_t>& rows) {
    Matrix m;
    m.n_rows = rows.size();
    m.n_cols = data.n_features;
    m.values.reserve(m.n_rows * m.n_cols);
    for (std::size_t r : rows) {
        auto row = data.row(r);
        m.values.insert(m.values.end(), row.begin(), row.end());
    }
    return m;
}

}  // namespace relia::data
