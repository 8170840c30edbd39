#include "relia/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "relia/errors.hpp"

namespace relia::metrics {

namespace {
constexpr double kDistanceClamp = 1e-12;
}

WeightedAttribution weighted_attribution(const attr::Attribution& anchor,
                                         const std::vector<attr::Attribution>& members,
                                         const std::vector<double>& distances) {
    if (members.empty()) throw DataError("weighted attribution: empty member list");
    if (members.size() != distances.size())
        throw DataError("weighted attribution: member/distance count mismatch");
    const std::size_t m = anchor.values.size();
    for (const auto& a : members)
        if (a.values.size() != m) throw DataError("weighted attribution: member length mismatch");

    WeightedAttribution out;
    out.weights_used.resize(members.size());
    double total = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (distances[i] < 0.0) throw DataError("weighted attribution: negative distance");
        if (distances[i] < kDistanceClamp) out.degenerate = true;
        out.weights_used[i] = 1.0 / std::max(distances[i], kDistanceClamp);
        total += out.weights_used[i];
    }
    for (double& w : out.weights_used) w /= total;

    out.values.assign(m, 0.0);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) out.values[j] += members[i].values[j] * out.weights_used[i];
    return out;
}

RobustnessResult local_robustness(const attr::Attribution& anchor,
                                  const std::vector<attr::Attribution>& members) {
    if (members.empty()) throw DataError("robustness: empty member list");
    RobustnessResult out;
    double sum = 0.0;
    for (const auto& member : members) {
        const SpearmanResult rho = spearman_rho(anchor.values, member.values);
        if (rho.degenerate) ++out.degenerate_members;
        sum += rho.value;
    }
    out.value = sum / static_cast<double>(members.size());
    return out;
}

SpearmanResult consistency(const attr::Attribution& anchor, const WeightedAttribution& weighted) {
    return spearman_rho(anchor.values, weighted.values);
}

std::string ReliabilityScore::flags() const {
    std::string s;
    auto add = [&s](const char* tok) {
        if (!s.empty()) s += ';';
        s += tok;
    };
    if (robustness_degenerate) add("degenerate_robustness");
    if (consistency_degenerate) add("degenerate_consistency");
    if (clamped_weights) add("clamped_weights");
    return s;
}

namespace {

ReliabilityScore assemble_score(const attr::Attribution& anchor_attr,
                                const std::vector<attr::Attribution>& member_attrs,
                                const nbhd::Neighbourhood& neighbourhood, attr::Method method,
                                std::size_t point_id) {
    ReliabilityScore score;
    score.point_id = point_id;
    score.method = method;
    score.generator = neighbourhood.generator;
    score.n_members = member_attrs.size();

    const RobustnessResult rob = local_robustness(anchor_attr, member_attrs);
    score.robustness = rob.value;
    score.robustness_degenerate = rob.degenerate_members > 0;

    const WeightedAttribution wa =
        weighted_attribution(anchor_attr, member_attrs, neighbourhood.distances);
    score.clamped_weights = wa.degenerate;

    const SpearmanResult cons = consistency(anchor_attr, wa);
    score.consistency = cons.value;
    score.consistency_degenerate = cons.degenerate;
    return score;
}

// Ensemble that degrades to a flagged zero attribution instead of throwing
// when every member is a zero vector (LRP-style vanishing relevance).
attr::Attribution ensemble_or_zero(const std::vector<attr::Attribution>& members,
                                   const std::vector<double>* weights, std::size_t m) {
    for (const auto& a : members)
        if (!a.is_zero()) return attr::ensemble(members, weights);
    attr::Attribution zero;
    zero.method = attr::Method::ensemble;
    zero.values.assign(m, 0.0);
    zero.degenerate = true;
    return zero;
}

}  // namespace

ReliabilityScore score_point(const net::MlpModel& model, std::span<const double> x,
                             attr::Method method, const nbhd::Neighbourhood& neighbourhood,
                             const attr::ExplainConfig& cfg, std::size_t point_id) {
    if (neighbourhood.size() == 0) throw DataError("score: neighbourhood is empty");
    const attr::Attribution anchor_attr = attr::explain(model, x, method, cfg);
    std::vector<attr::Attribution> member_attrs;
    member_attrs.reserve(neighbourhood.size());
    for (const auto& member : neighbourhood.members)
        member_attrs.push_back(attr::explain(model, member, method, cfg));
    return assemble_score(anchor_attr, member_attrs, neighbourhood, method, point_id);
}

std::vector<ReliabilityScore> score_point_methods(const net::MlpModel& model,
                                                  std::span<const double> x,
                                                  const std::vector<attr::Method>& methods,
                                                  const nbhd::Neighbourhood& neighbourhood,
                                                  const attr::ExplainConfig& cfg,
                                                  EnsembleWeighting weighting,
                                                  std::size_t point_id) {
    if (neighbourhood.size() == 0) throw DataError("score: neighbourhood is empty");
    const std::size_t m = model.input_dim();

    // Base methods needed directly or as ensemble members.
    std::vector<attr::Method> base;
    auto want_base = [&base](attr::Method mm) {
        if (mm != attr::Method::ensemble &&
            std::find(base.begin(), base.end(), mm) == base.end())
            base.push_back(mm);
    };
    bool want_ensemble = false;
    for (attr::Method mm : methods) {
        if (mm == attr::Method::ensemble) {
            want_ensemble = true;
            for (attr::Method member : cfg.ensemble_members) want_base(member);
        } else {
            want_base(mm);
        }
    }

    std::map<attr::Method, attr::Attribution> anchor_base;
    std::map<attr::Method, std::vector<attr::Attribution>> member_base;
    for (attr::Method mm : base) {
        anchor_base[mm] = attr::explain(model, x, mm, cfg);
        auto& list = member_base[mm];
        list.reserve(neighbourhood.size());
        for (const auto& member : neighbourhood.members)
            list.push_back(attr::explain(model, member, mm, cfg));
    }

    std::vector<ReliabilityScore> out;
    std::map<attr::Method, ReliabilityScore> base_scores;
    for (attr::Method mm : base)
        base_scores[mm] =
            assemble_score(anchor_base[mm], member_base[mm], neighbourhood, mm, point_id);

    for (attr::Method mm : methods) {
        if (mm != attr::Method::ensemble) {
            out.push_back(base_scores[mm]);
            continue;
        }
        if (!want_ensemble) continue;

        std::vector<double> weights;
        if (!cfg.ensemble_weights.empty()) {
            weights = cfg.ensemble_weights;
        } else if (weighting == EnsembleWeighting::robustness) {
            double total = 0.0;
            for (attr::Method member : cfg.ensemble_members) {
                weights.push_back(std::max(base_scores[member].robustness, 0.0));
                total += weights.back();
            }
            if (total > 0.0)
                for (double& w : weights) w /= total;
            else
                weights.clear();  // all members non-positive: fall back to uniform
        }

        std::vector<attr::Attribution> anchor_members;
        for (attr::Method member : cfg.ensemble_members) anchor_members.push_back(anchor_base[member]);
        const attr::Attribution anchor_ens =
            ensemble_or_zero(anchor_members, weights.empty() ? nullptr : &weights, m);

        std::vector<attr::Attribution> member_ens;
        member_ens.reserve(neighbourhood.size());
        for (std::size_t i = 0; i < neighbourhood.size(); ++i) {
            std::vector<attr::Attribution> parts;
            for (attr::Method member : cfg.ensemble_members) parts.push_back(member_base[member][i]);
            member_ens.push_back(ensemble_or_zero(parts, weights.empty() ? nullptr : &weights, m));
        }
        out.push_back(
            assemble_score(anchor_ens, member_ens, neighbourhood, attr::Method::ensemble, point_id));
    }
    return out;
}

}  // namespace relia::metrics
