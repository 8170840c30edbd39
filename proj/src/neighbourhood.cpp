#include "relia/neighbourhood.hpp"

#include <fstream>
#include <random>

#include "relia/csv.hpp"
#include "relia/perturb.hpp"

namespace relia::nbhd {

std::string generator_name(Generator g) {
    return g == Generator::medoid ? "medoid" : "gaussian";
}

std::size_t pick_mixing_medoid(const MedoidIndex& index, std::span<const double> x, Rng& rng) {
    const std::size_t home = index.nearest_medoid(x);
    const auto& list = index.neighbour_lists[home];
    if (list.empty())
        throw ConfigError("neighbourhood: medoid " + std::to_string(home) +
                          " has no neighbours (single-medoid index)");
    std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
    return list[pick(rng)];
}

namespace {

template <typename MakeCandidate>
Neighbourhood generate_filtered(const net::MlpModel& model, std::span<const double> x,
                                Generator generator, std::size_t n_target,
                                std::size_t max_attempts, std::optional<double> locality_epsilon,
                                MakeCandidate&& make_candidate) {
    if (n_target == 0) throw ConfigError("neighbourhood: n_target must be >= 1");
    if (max_attempts == 0) max_attempts = 20 * n_target;

    Neighbourhood nb;
    nb.anchor.assign(x.begin(), x.end());
    nb.anchor_class = net::predict_class(model, x);
    nb.generator = generator;

    while (nb.members.size() < n_target && nb.stats.attempts < max_attempts) {
        ++nb.stats.attempts;
        std::vector<double> candidate = make_candidate();
        const double dist = euclidean(x, candidate);
        if (dist == 0.0) {
            ++nb.stats.zero_distance_drops;
            continue;
        }
        if (locality_epsilon && dist >= *locality_epsilon) {
            ++nb.stats.locality_rejections;
            continue;
        }
        if (net::predict_class(model, candidate) != nb.anchor_class) {
            ++nb.stats.class_rejections;
            continue;
        }
        nb.members.push_back(std::move(candidate));
        nb.distances.push_back(dist);
    }

    if (nb.members.empty())
        throw UnstablePointError(
            "neighbourhood: no perturbation kept the anchor class after " +
                std::to_string(nb.stats.attempts) + " attempts (" +
                std::to_string(nb.stats.class_rejections) + " class rejections, " +
                std::to_string(nb.stats.zero_distance_drops) + " duplicates, " +
                std::to_string(nb.stats.locality_rejections) + " locality rejections)",
            nb.stats);
    return nb;
}

}  // namespace

Neighbourhood generate_neighbourhood(const net::MlpModel& model, std::span<const double> x,
                                     const MedoidIndex& index, const PerturbConfig& cfg) {
    if (x.size() != index.dim)
        throw ConfigError("neighbourhood: point dimension does not match index");
    Rng rng(derive_seed(cfg.seed, "medoid-neighbourhood"));
    return generate_filtered(model, x, Generator::medoid, cfg.n_target, cfg.max_attempts,
                             cfg.locality_epsilon, [&] {
                                 const std::size_t mix = pick_mixing_medoid(index, x, rng);
                                 return perturb_once(x, index.medoid(mix), cfg.lambda, rng,
                                                     cfg.per_point_lambda);
                             });
}

Neighbourhood generate_gaussian_neighbourhood(const net::MlpModel& model,
                                              std::span<const double> x,
                                              const GaussianConfig& cfg) {
    if (!(cfg.sigma > 0.0)) throw ConfigError("neighbourhood: sigma must be positive");
    Rng rng(derive_seed(cfg.seed, "gaussian-neighbourhood"));
    std::normal_distribution<double> noise(0.0, cfg.sigma);
    return generate_filtered(model, x, Generator::gaussian, cfg.n_target, cfg.max_attempts,
                             cfg.locality_epsilon, [&] {
                                 std::vector<double> candidate(x.begin(), x.end());
                                 for (double& v : candidate) v += noise(rng);
                                 return candidate;
                             });
}

AcceptanceCount measure_acceptance(const net::MlpModel& model, std::span<const double> x,
                                   const MedoidIndex& index, double lambda, std::size_t n_probe,
                                   std::uint64_t seed, bool per_point_lambda) {
    Rng rng(derive_seed(seed, "acceptance-probe"));
    const int anchor_class = net::predict_class(model, x);
    AcceptanceCount count;
    for (std::size_t t = 0; t < n_probe; ++t) {
        const std::size_t mix = pick_mixing_medoid(index, x, rng);
        const auto candidate = perturb_once(x, index.medoid(mix), lambda, rng, per_point_lambda);
        ++count.generated;
        if (net::predict_class(model, candidate) == anchor_class) ++count.preserved;
    }
    return count;
}

void dump_neighbourhoods(const std::vector<std::pair<std::size_t, Neighbourhood>>& items,
                         const std::vector<std::string>& feature_names, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("neighbourhood: cannot write dump '" + path + "'");
    out << "anchor_id,member_idx,generator,distance";
    for (const auto& name : feature_names) out << ',' << name;
    out << '\n';
    for (const auto& [anchor_id, nb] : items) {
        for (std::size_t i = 0; i < nb.size(); ++i) {
            out << anchor_id << ',' << i << ',' << generator_name(nb.generator) << ','
                << data::format_double(nb.distances[i]);
            for (double v : nb.members[i]) out << ',' << data::format_double(v);
            out << '\n';
        }
    }
}

}  // namespace relia::nbhd
