#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relia/dataset.hpp"

namespace relia::nbhd {

/// Result of PAM-style k-medoids: medoid ordinals index into the clustered
/// row matrix; assignments map every row to a medoid ordinal.
struct PamResult {
    std::vector<std::size_t> medoids;
    std::vector<std::size_t> assignments;
    double total_cost = 0.0;
    std::vector<double> cost_history;  // cost after init and after each accepted swap
};

struct BestSwap {
    std::size_t medoid_ordinal = 0;
    std::size_t candidate_row = 0;
    double delta = 0.0;  // change in total cost; negative improves
};

/// k-means++-style seeded initialization followed by swap refinement: apply
/// the best improving (medoid, non-medoid) swap until none improves or the
/// iteration cap is reached. Cost is the sum of Euclidean distances to the
/// assigned medoid and is non-increasing across accepted swaps.
PamResult pam(const data::Matrix& rows, std::size_t k, std::uint64_t seed,
              std::size_t max_swap_iterations = 100, bool parallel = true);

/// Incremental best-swap kernel used by pam. Candidate evaluation is
/// data-parallel; the reduction over candidates is a serial scan, so the
/// result is identical for any thread count.
BestSwap best_swap(const data::Matrix& rows, const std::vector<std::size_t>& medoids,
                   const std::vector<std::size_t>& nearest,
                   const std::vector<double>& nearest_dist,
                   const std::vector<double>& second_dist, bool parallel);

/// Serial reference: recomputes the full objective for every swap. O(k N^2),
/// only for tests and the benchmark.
BestSwap best_swap_reference(const data::Matrix& rows, const std::vector<std::size_t>& medoids);

double assignment_cost(const data::Matrix& rows, const std::vector<std::size_t>& medoids);

/// Exhaustive optimal 2-medoid clustering, used as a test oracle.
std::pair<std::vector<std::size_t>, double> exhaustive_two_medoids(const data::Matrix& rows);

/// Medoid index over the validation set: k chosen so clusters average ~10
/// points, plus each medoid's nearest other medoids for mixing draws.
struct MedoidIndex {
    std::size_t dim = 0;
    std::size_t k_nn = 0;
    std::vector<std::size_t> medoid_rows;  // into the source row matrix
    data::Matrix medoid_points;
    std::vector<std::size_t> assignments;  // source row -> medoid ordinal (empty after load)
    std::vector<std::vector<std::size_t>> neighbour_lists;
    double total_cost = 0.0;

    std::span<const double> medoid(std::size_t ordinal) const {
        return medoid_points.row(ordinal);
    }
    /// Ordinal of the medoid closest to x (ties -> lowest ordinal).
    std::size_t nearest_medoid(std::span<const double> x) const;
};

MedoidIndex build_medoid_index(const data::Matrix& validation, std::size_t k_nn,
                               std::uint64_t seed, bool parallel = true);

void save_medoid_index(const MedoidIndex& index, const std::string& path);
MedoidIndex load_medoid_index(const std::string& path);

double euclidean(std::span<const double> a, std::span<const double> b);

}  // namespace relia::nbhd
