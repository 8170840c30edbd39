#include "relia/ensemble.hpp"

#include <cmath>

#include "relia/errors.hpp"

namespace relia::attr {

Attribution ensemble(const std::vector<Attribution>& members, const std::vector<double>* weights) {
    if (members.empty()) throw ConfigError("ensemble: empty member list");
    const std::size_t m = members.front().values.size();
    for (const auto& a : members)
        if (a.values.size() != m) throw ConfigError("ensemble: member length mismatch");
    if (weights) {
        if (weights->size() != members.size())
            throw ConfigError("ensemble: weight count does not match member count");
        double s = 0.0;
        for (double w : *weights) {
            if (w < 0.0) throw ConfigError("ensemble: weights must be non-negative");
            s += w;
        }
        if (std::abs(s - 1.0) > 1e-9) throw ConfigError("ensemble: weights must sum to 1");
    }

    Attribution out;
    out.method = Method::ensemble;
    out.values.assign(m, 0.0);

    double kept_weight = 0.0;
    std::size_t dropped = 0;
    std::vector<std::pair<std::vector<double>, double>> normalized;
    for (std::size_t i = 0; i < members.size(); ++i) {
        double l1 = 0.0;
        for (double v : members[i].values) l1 += std::abs(v);
        if (l1 == 0.0) {
            ++dropped;
            continue;
        }
        std::vector<double> unit(m);
        for (std::size_t j = 0; j < m; ++j) unit[j] = members[i].values[j] / l1;
        const double w = weights ? (*weights)[i] : 1.0;
        normalized.emplace_back(std::move(unit), w);
        kept_weight += w;
    }
    if (normalized.empty() || kept_weight == 0.0)
        throw ConfigError("ensemble: all members are zero vectors");

    for (const auto& [unit, w] : normalized)
        for (std::size_t j = 0; j < m; ++j) out.values[j] += unit[j] * (w / kept_weight);

    out.meta["members"] = static_cast<double>(members.size());
    out.meta["dropped_members"] = static_cast<double>(dropped);
    out.degenerate = out.is_zero();
    return out;
}

}  // namespace relia::attr
