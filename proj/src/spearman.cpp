#include "relia/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "relia/errors.hpp"

namespace relia::metrics {

std::vector<double> average_ranks(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && v[idx[j]] == v[idx[i]]) ++j;
        const double rank = static_cast<double>(i + 1 + j) / 2.0;  // mean of positions i+1..j
        for (std::size_t t = i; t < j; ++t) ranks[idx[t]] = rank;
        i = j;
    }
    return ranks;
}

SpearmanResult spearman_rho(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DataError("spearman: vector length mismatch");
    if (a.size() < 2) throw DataError("spearman: need at least 2 values");

    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    const double n = static_cast<double>(a.size());
    const double mean = (n + 1.0) / 2.0;  // ranks always average to this

    double s_ab = 0.0, s_aa = 0.0, s_bb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = ra[i] - mean;
        const double db = rb[i] - mean;
        s_ab += da * db;
        s_aa += da * da;
        s_bb += db * db;
    }
    if (s_aa == 0.0 || s_bb == 0.0) return {0.0, true};
    return {std::clamp(s_ab / std::sqrt(s_aa * s_bb), -1.0, 1.0), false};
}

}  // namespace relia::metrics
