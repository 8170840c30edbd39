#include "relia/standardize.hpp"

#include <cmath>

#include "relia/errors.hpp"

namespace relia::data {

StandardizationStats fit_standardize(const Dataset& data, const std::vector<std::size_t>& fit_rows) {
    if (fit_rows.empty()) throw DataError("standardize: fit row set is empty");
    const std::size_t m = data.n_features;
    const double n = static_cast<double>(fit_rows.size());

    StandardizationStats stats;
    stats.means.assign(m, 0.0);
    stats.std_devs.assign(m, 0.0);

    for (std::size_t r : fit_rows)
        for (std::size_t j = 0; j < m; ++j) stats.means[j] += data.feature(r, j);
    for (std::size_t j = 0; j < m; ++j) stats.means[j] /= n;

    for (std::size_t r : fit_rows)
        for (std::size_t j = 0; j < m; ++j) {
            const double d = data.feature(r, j) - stats.means[j];
            stats.std_devs[j] += d * d;
        }
    for (std::size_t j = 0; j < m; ++j) {
        stats.std_devs[j] = std::sqrt(stats.std_devs[j] / n);
        if (!(stats.std_devs[j] > 0.0) || !std::isfinite(stats.std_devs[j]))
            throw DataError("standardize: feature '" + data.feature_names[j] +
                            "' is constant over the fit rows");
    }
    return stats;
}

namespace {

void check_dim(const Dataset& data, const StandardizationStats& stats) {
    if (stats.dim() != data.n_features || stats.std_devs.size() != data.n_features)
        throw DataError("standardize: stats dimension " + std::to_string(stats.dim()) +
                        " does not match dataset feature count " + std::to_string(data.n_features));
}

}  // namespace

Dataset apply_standardize(const Dataset& data, const StandardizationStats& stats) {
    check_dim(data, stats);
    Dataset out = data;
    for (std::size_t i = 0; i < data.n_rows; ++i)
        for (std::size_t j = 0; j < data.n_features; ++j)
            out.features[i * data.n_features + j] =
                (data.feature(i, j) - stats.means[j]) / stats.std_devs[j];
    return out;
}

Dataset invert_standardize(const Dataset& data, const StandardizationStats& stats) {
    check_dim(data, stats);
    Dataset out = data;
    for (std::size_t i = 0; i < data.n_rows; ++i)
        for (std::size_t j = 0; j < data.n_features; ++j)
            out.features[i * data.n_features + j] =
                data.feature(i, j) * stats.std_devs[j] + stats.means[j];
    return out;
}

std::vector<double> standardize_row(std::span<const double> x, const StandardizationStats& stats) {
    if (x.size() != stats.dim())
        throw DataError("standardize: row length does not match stats dimension");
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = (x[j] - stats.means[j]) / stats.std_devs[j];
    return out;
}

}  // namespace relia::data
