#pragma once

#include "relia/explain.hpp"
#include "relia/neighbourhood.hpp"
#include "relia/spearman.hpp"

namespace relia::metrics {

/// Inverse-distance weighted average of the neighbourhood members'
/// attributions; every coordinate is a convex combination of the members'.
struct WeightedAttribution {
    std::vector<double> values;
    std::vector<double> weights_used;  // normalized 1/dist weights
    bool degenerate = false;           // a distance needed clamping before inversion
};

/// Weights pi = 1 / max(dist, 1e-12). The anchor itself is never a member
/// (its distance would be 0); anchor is passed only to validate dimensions.
WeightedAttribution weighted_attribution(const attr::Attribution& anchor,
                                         const std::vector<attr::Attribution>& members,
                                         const std::vector<double>& distances);

struct RobustnessResult {
    double value = 0.0;
    std::size_t degenerate_members = 0;  // member correlations counted as 0
};

/// Mean Spearman correlation between the anchor attribution and each member's.
RobustnessResult local_robustness(const attr::Attribution& anchor,
                                  const std::vector<attr::Attribution>& members);

/// Spearman correlation between the anchor attribution and the weighted one.
SpearmanResult consistency(const attr::Attribution& anchor, const WeightedAttribution& weighted);

enum class EnsembleWeighting { uniform, robustness };

struct ReliabilityScore {
    std::size_t point_id = 0;
    attr::Method method = attr::Method::integrated_gradients;
    nbhd::Generator generator = nbhd::Generator::medoid;
    double robustness = 0.0;
    double consistency = 0.0;
    std::size_t n_members = 0;
    bool robustness_degenerate = false;
    bool consistency_degenerate = false;
    bool clamped_weights = false;

    /// Semicolon-joined flag tokens, empty when clean.
    std::string flags() const;
};

/// Full per-point pipeline for one method: anchor + member attributions,
/// weighted aggregation, robustness and consistency.
ReliabilityScore score_point(const net::MlpModel& model, std::span<const double> x,
                             attr::Method method, const nbhd::Neighbourhood& neighbourhood,
                             const attr::ExplainConfig& cfg, std::size_t point_id = 0);

/// Scores several methods over one neighbourhood, computing each base
/// method's attributions once and assembling the ensemble from them. With
/// robustness weighting the ensemble weights are the members' local
/// robustness scores clamped at 0 (uniform fallback when all are <= 0).
std::vector<ReliabilityScore> score_point_methods(const net::MlpModel& model,
                                                  std::span<const double> x,
                                                  const std::vector<attr::Method>& methods,
                                                  const nbhd::Neighbourhood& neighbourhood,
                                                  const attr::ExplainConfig& cfg,
                                                  EnsembleWeighting weighting,
                                                  std::size_t point_id = 0);

}  // namespace relia::metrics
