#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "relia/errors.hpp"
#include "relia/kmedoids.hpp"
#include "relia/mlp.hpp"
#include "relia/rng.hpp"

namespace relia::nbhd {

enum class Generator { medoid, gaussian };
std::string generator_name(Generator g);

struct PerturbConfig {
    double lambda = 0.05;
    std::size_t n_target = 100;
    std::size_t max_attempts = 0;  // 0 = 20 * n_target
    std::optional<double> locality_epsilon;
    bool per_point_lambda = false;
    std::uint64_t seed = 0;
};

struct GaussianConfig {
    double sigma = 0.1;
    std::size_t n_target = 100;
    std::size_t max_attempts = 0;  // 0 = 20 * n_target
    std::optional<double> locality_epsilon;
    std::uint64_t seed = 0;
};

struct NeighbourhoodStats {
    std::size_t attempts = 0;
    std::size_t class_rejections = 0;
    std::size_t zero_distance_drops = 0;
    std::size_t locality_rejections = 0;
};

/// Same-predicted-class perturbations around an anchor, with their distances.
struct Neighbourhood {
    std::vector<double> anchor;
    int anchor_class = 0;
    std::vector<std::vector<double>> members;
    std::vector<double> distances;
    Generator generator = Generator::medoid;
    NeighbourhoodStats stats;

    std::size_t size() const { return members.size(); }
};

/// Raised when no perturbation survives filtering within max_attempts.
class UnstablePointError : public Error {
public:
    UnstablePointError(const std::string& msg, NeighbourhoodStats stats)
        : Error(msg), stats(stats) {}
    NeighbourhoodStats stats;
};

/// Finds the medoid cluster x falls in and draws uniformly from that medoid's
/// neighbour list; returns the chosen medoid's ordinal.
std::size_t pick_mixing_medoid(const MedoidIndex& index, std::span<const double> x, Rng& rng);

/// Medoid-based on-manifold generation: repeat pick + perturb, keep only
/// members the model classifies like the anchor (and inside the optional
/// locality ball), until n_target members or max_attempts. Zero-distance
/// duplicates are dropped. Deterministic given cfg.seed.
Neighbourhood generate_neighbourhood(const net::MlpModel& model, std::span<const double> x,
                                     const MedoidIndex& index, const PerturbConfig& cfg);

/// Baseline generator: i.i.d. Gaussian noise per feature, same filtering.
Neighbourhood generate_gaussian_neighbourhood(const net::MlpModel& model,
                                              std::span<const double> x,
                                              const GaussianConfig& cfg);

struct AcceptanceCount {
    std::size_t preserved = 0;
    std::size_t generated = 0;

    double rate() const {
        return generated == 0 ? 0.0 : static_cast<double>(preserved) / static_cast<double>(generated);
    }
};

/// Class-preservation rate of raw (unfiltered) medoid perturbations around x,
/// used by lambda tuning.
AcceptanceCount measure_acceptance(const net::MlpModel& model, std::span<const double> x,
                                   const MedoidIndex& index, double lambda, std::size_t n_probe,
                                   std::uint64_t seed, bool per_point_lambda = false);

/// CSV dump: anchor_id, member_idx, generator, distance, feature values.
void dump_neighbourhoods(const std::vector<std::pair<std::size_t, Neighbourhood>>& items,
                         const std::vector<std::string>& feature_names, const std::string& path);

}  // namespace relia::nbhd
