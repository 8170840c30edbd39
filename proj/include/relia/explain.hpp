#pragma once

#include <span>

#include "relia/attribution.hpp"
#include "relia/deeplift.hpp"
#include "relia/ensemble.hpp"
#include "relia/integrated_gradients.hpp"
#include "relia/lrp.hpp"

namespace relia::attr {

/// Shared parameters for the dispatch facade. The default baseline is the
/// zero vector in standardized space, i.e. the per-feature training mean in
/// raw space.
struct ExplainConfig {
    std::vector<double> baseline;  // empty = zeros(model input dim)
    std::size_t ig_steps = 64;
    double lrp_epsilon = 1e-6;
    double deeplift_threshold = 1e-9;
    std::vector<Method> ensemble_members = {Method::integrated_gradients, Method::deeplift,
                                            Method::lrp};
    std::vector<double> ensemble_weights;  // empty = uniform

    std::vector<double> resolved_baseline(std::size_t m) const;
};

/// Routes to the requested method and records its parameters in meta.
Attribution explain(const net::MlpModel& model, std::span<const double> x, Method method,
                    const ExplainConfig& cfg);

/// Assembles the ensemble from already-computed member attributions (same
/// drop-then-average rule as explain with Method::ensemble).
Attribution ensemble_from_members(const std::vector<Attribution>& members,
                                  const ExplainConfig& cfg);

}  // namespace relia::attr
