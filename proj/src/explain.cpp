#include "relia/explain.hpp"

#include <set>

#include "relia/errors.hpp"

namespace relia::attr {

std::vector<double> ExplainConfig::resolved_baseline(std::size_t m) const {
    if (baseline.empty()) return std::vector<double>(m, 0.0);
    if (baseline.size() != m)
        throw ConfigError("explain: baseline length does not match model input dim");
    return baseline;
}

Attribution ensemble_from_members(const std::vector<Attribution>& members,
                                  const ExplainConfig& cfg) {
    return ensemble(members, cfg.ensemble_weights.empty() ? nullptr : &cfg.ensemble_weights);
}

Attribution explain(const net::MlpModel& model, std::span<const double> x, Method method,
                    const ExplainConfig& cfg) {
    switch (method) {
        case Method::integrated_gradients: {
            IgParams params{cfg.resolved_baseline(model.input_dim()), cfg.ig_steps};
            return integrated_gradients(model, x, params);
        }
        case Method::deeplift: {
            const auto baseline = cfg.resolved_baseline(model.input_dim());
            return deeplift_rescale(model, x, baseline, cfg.deeplift_threshold);
        }
        case Method::lrp:
            return lrp_epsilon(model, x, LrpParams{cfg.lrp_epsilon});
        case Method::ensemble: {
            if (cfg.ensemble_members.empty())
                throw ConfigError("explain: ensemble member list is empty");
            std::set<Method> distinct(cfg.ensemble_members.begin(), cfg.ensemble_members.end());
            if (distinct.size() != cfg.ensemble_members.size())
                throw ConfigError("explain: ensemble members must be distinct");
            for (Method mem : cfg.ensemble_members)
                if (mem == Method::ensemble)
                    throw ConfigError("explain: ensemble cannot contain itself");
            std::vector<Attribution> members;
            members.reserve(cfg.ensemble_members.size());
            for (Method mem : cfg.ensemble_members) members.push_back(explain(model, x, mem, cfg));
            return ensemble_from_members(members, cfg);
        }
    }
    throw ConfigError("explain: unknown method tag");
}

}  // namespace relia::attr
