#include "relia/kmedoids.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>

#include "relia/csv.hpp"
#include "relia/errors.hpp"
#include "relia/rng.hpp"

namespace relia::nbhd {

double euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        s += d * d;
    }
    return std::sqrt(s);
}

namespace {

// Sample k initial medoids, weighting each point by its squared distance to
// the closest already-chosen medoid.
std::vector<std::size_t> seed_plus_plus(const data::Matrix& rows, std::size_t k, Rng& rng) {
    const std::size_t n = rows.n_rows;
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    std::uniform_int_distribution<std::size_t> first(0, n - 1);
    chosen.push_back(first(rng));

    std::vector<double> d2(n);
    std::vector<char> is_chosen(n, 0);
    is_chosen[chosen[0]] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = euclidean(rows.row(i), rows.row(chosen[0]));
        d2[i] = d * d;
    }

    while (chosen.size() < k) {
        const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
        std::size_t pick = n;
        if (total > 0.0) {
            std::uniform_real_distribution<double> u(0.0, total);
            double r = u(rng);
            for (std::size_t i = 0; i < n; ++i) {
                r -= d2[i];
                if (r <= 0.0 && !is_chosen[i]) {
                    pick = i;
                    break;
                }
            }
        }
        if (pick == n) {
            // All remaining mass sits on chosen points (duplicate rows or k
            // near n): take the lowest-index unchosen row.
            for (std::size_t i = 0; i < n; ++i)
                if (!is_chosen[i]) {
                    pick = i;
                    break;
                }
        }
        chosen.push_back(pick);
        is_chosen[pick] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = euclidean(rows.row(i), rows.row(pick));
            d2[i] = std::min(d2[i], d * d);
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

struct AssignState {
    std::vector<std::size_t> nearest;
    std::vector<double> nearest_dist;
    std::vector<double> second_dist;
    double cost = 0.0;
};

AssignState assign_all(const data::Matrix& rows, const std::vector<std::size_t>& medoids,
                       bool parallel) {
    const std::size_t n = rows.n_rows;
    AssignState st;
    st.nearest.resize(n);
    st.nearest_dist.resize(n);
    st.second_dist.resize(n);

#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t ip = 0; ip < static_cast<std::ptrdiff_t>(n); ++ip) {
        const auto i = static_cast<std::size_t>(ip);
        double d1 = std::numeric_limits<double>::infinity();
        double d2 = std::numeric_limits<double>::infinity();
        std::size_t n1 = 0;
        for (std::size_t j = 0; j < medoids.size(); ++j) {
            const double d = euclidean(rows.row(i), rows.row(medoids[j]));
            if (d < d1) {
                d2 = d1;
                d1 = d;
                n1 = j;
            } else if (d < d2) {
                d2 = d;
            }
        }
        st.nearest[i] = n1;
        st.nearest_dist[i] = d1;
        st.second_dist[i] = d2;
    }
    for (double d : st.nearest_dist) st.cost += d;
    return st;
}

}  // namespace

double assignment_cost(const data::Matrix& rows, const std::vector<std::size_t>& medoids) {
    double cost = 0.0;
    for (std::size_t i = 0; i < rows.n_rows; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t m : medoids) best = std::min(best, euclidean(rows.row(i), rows.row(m)));
        cost += best;
    }
    return cost;
}

BestSwap best_swap(const data::Matrix& rows, const std::vector<std::size_t>& medoids,
                   const std::vector<std::size_t>& nearest,
                   const std::vector<double>& nearest_dist,
                   const std::vector<double>& second_dist, bool parallel) {
    const std::size_t n = rows.n_rows;
    const std::size_t k = medoids.size();
    std::vector<char> is_medoid(n, 0);
    for (std::size_t m : medoids) is_medoid[m] = 1;

    std::vector<double> cand_delta(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> cand_medoid(n, 0);

#pragma omp parallel if (parallel)
    {
        std::vector<double> removal(k);
#pragma omp for schedule(static)
        for (std::ptrdiff_t hp = 0; hp < static_cast<std::ptrdiff_t>(n); ++hp) {
            const auto h = static_cast<std::size_t>(hp);
            if (is_medoid[h]) continue;
            std::fill(removal.begin(), removal.end(), 0.0);
            double shared = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d_h = euclidean(rows.row(i), rows.row(h));
                const double gain = std::min(d_h - nearest_dist[i], 0.0);
                shared += gain;
                // Removing i's own medoid re-homes i to min(second, d_h).
                removal[nearest[i]] += std::min(d_h, second_dist[i]) - nearest_dist[i] - gain;
            }
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_j = 0;
            for (std::size_t j = 0; j < k; ++j) {
                const double delta = shared + removal[j];
                if (delta < best) {
                    best = delta;
                    best_j = j;
                }
            }
            cand_delta[h] = best;
            cand_medoid[h] = best_j;
        }
    }

    BestSwap out;
    out.delta = std::numeric_limits<double>::infinity();
    for (std::size_t h = 0; h < n; ++h) {
        if (cand_delta[h] < out.delta) {
            out.delta = cand_delta[h];
            out.candidate_row = h;
            out.medoid_ordinal = cand_medoid[h];
        }
    }
    return out;
}

BestSwap best_swap_reference(const data::Matrix& rows, const std::vector<std::size_t>& medoids) {
    const double base = assignment_cost(rows, medoids);
    std::vector<char> is_medoid(rows.n_rows, 0);
    for (std::size_t m : medoids) is_medoid[m] = 1;

    BestSwap out;
    out.delta = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> trial = medoids;
    for (std::size_t h = 0; h < rows.n_rows; ++h) {
        if (is_medoid[h]) continue;
        for (std::size_t j = 0; j < medoids.size(); ++j) {
            trial[j] = h;
            const double delta = assignment_cost(rows, trial) - base;
            trial[j] = medoids[j];
            if (delta < out.delta) {
                out.delta = delta;
                out.candidate_row = h;
                out.medoid_ordinal = j;
            }
        }
    }
    return out;
}

PamResult pam(const data::Matrix& rows, std::size_t k, std::uint64_t seed,
              std::size_t max_swap_iterations, bool parallel) {
    const std::size_t n = rows.n_rows;
    if (k == 0 || k > n)
        throw ConfigError("kmedoids: k must lie in [1, n_rows]");

    Rng rng(derive_seed(seed, "kmedoids-init"));
    PamResult result;
    result.medoids = seed_plus_plus(rows, k, rng);

    AssignState st = assign_all(rows, result.medoids, parallel);
    result.cost_history.push_back(st.cost);

    constexpr double kMinImprovement = 1e-9;
    for (std::size_t iter = 0; iter < max_swap_iterations; ++iter) {
        if (k == n) break;
        const BestSwap swap =
            best_swap(rows, result.medoids, st.nearest, st.nearest_dist, st.second_dist, parallel);
        if (!(swap.delta < -kMinImprovement)) break;
        result.medoids[swap.medoid_ordinal] = swap.candidate_row;
        st = assign_all(rows, result.medoids, parallel);
        result.cost_history.push_back(st.cost);
    }

    result.assignments = std::move(st.nearest);
    result.total_cost = st.cost;
    return result;
}

std::pair<std::vector<std::size_t>, double> exhaustive_two_medoids(const data::Matrix& rows) {
    const std::size_t n = rows.n_rows;
    if (n < 2) throw ConfigError("kmedoids: need at least 2 rows");
    std::vector<std::size_t> best = {0, 1};
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            double cost = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                cost += std::min(euclidean(rows.row(i), rows.row(a)),
                                 euclidean(rows.row(i), rows.row(b)));
            if (cost < best_cost) {
                best_cost = cost;
                best = {a, b};
            }
        }
    return {best, best_cost};
}

std::size_t MedoidIndex::nearest_medoid(std::span<const double> x) const {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < medoid_points.n_rows; ++j) {
        const double d = euclidean(x, medoid_points.row(j));
        if (d < best_d) {
            best_d = d;
            best = j;
        }
    }
    return best;
}

MedoidIndex build_medoid_index(const data::Matrix& validation, std::size_t k_nn,
                               std::uint64_t seed, bool parallel) {
    constexpr std::size_t kTargetClusterSize = 10;
    if (validation.n_rows < 2 * kTargetClusterSize)
        throw DataError("medoid index: need at least " + std::to_string(2 * kTargetClusterSize) +
                        " validation rows, got " + std::to_string(validation.n_rows));
    if (k_nn == 0) throw ConfigError("medoid index: k_nn must be >= 1");

    const auto k = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::llround(static_cast<double>(validation.n_rows) /
                                                 static_cast<double>(kTargetClusterSize))));
    PamResult clusters = pam(validation, k, seed, 100, parallel);

    MedoidIndex index;
    index.dim = validation.n_cols;
    index.k_nn = k_nn;
    index.medoid_rows = clusters.medoids;
    index.assignments = std::move(clusters.assignments);
    index.total_cost = clusters.total_cost;
    index.medoid_points.n_rows = k;
    index.medoid_points.n_cols = validation.n_cols;
    index.medoid_points.values.reserve(k * validation.n_cols);
    for (std::size_t m : clusters.medoids) {
        auto row = validation.row(m);
        index.medoid_points.values.insert(index.medoid_points.values.end(), row.begin(), row.end());
    }

    // Each medoid's nearest other medoids, ties broken by ordinal.
    const std::size_t list_len = std::min(k_nn, k - 1);
    index.neighbour_lists.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
        std::vector<std::pair<double, std::size_t>> dists;
        dists.reserve(k - 1);
        for (std::size_t b = 0; b < k; ++b)
            if (b != a) dists.emplace_back(euclidean(index.medoid(a), index.medoid(b)), b);
        std::sort(dists.begin(), dists.end());
        index.neighbour_lists[a].reserve(list_len);
        for (std::size_t t = 0; t < list_len; ++t)
            index.neighbour_lists[a].push_back(dists[t].second);
    }
    return index;
}

void save_medoid_index(const MedoidIndex& index, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("medoid index: cannot write '" + path + "'");
    out << "relia-medoid-index v1\n";
    out << "dim " << index.dim << " k " << index.medoid_rows.size() << " knn " << index.k_nn
        << '\n';
    for (std::size_t j = 0; j < index.medoid_rows.size(); ++j) {
        out << "medoid " << j << ' ' << index.medoid_rows[j];
        for (double v : index.medoid(j)) out << ' ' << data::format_double(v);
        out << '\n';
    }
    for (std::size_t j = 0; j < index.neighbour_lists.size(); ++j) {
        out << "neighbours " << j;
        for (std::size_t b : index.neighbour_lists[j]) out << ' ' << b;
        out << '\n';
    }
}

MedoidIndex load_medoid_index(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("medoid index: cannot open '" + path + "'");
    std::string magic, version;
    if (!(in >> magic >> version) || magic != "relia-medoid-index" || version != "v1")
        throw DataError("medoid index: '" + path + "' is not a v1 index file");

    MedoidIndex index;
    std::string tok;
    std::size_t k = 0;
    if (!(in >> tok >> index.dim) || tok != "dim")
        throw DataError("medoid index: malformed header");
    if (!(in >> tok >> k) || tok != "k") throw DataError("medoid index: malformed header");
    if (!(in >> tok >> index.k_nn) || tok != "knn") throw DataError("medoid index: malformed header");

    index.medoid_rows.resize(k);
    index.medoid_points.n_rows = k;
    index.medoid_points.n_cols = index.dim;
    index.medoid_points.values.resize(k * index.dim);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t ord = 0;
        if (!(in >> tok >> ord >> index.medoid_rows[j]) || tok != "medoid" || ord != j)
            throw DataError("medoid index: malformed medoid row " + std::to_string(j));
        for (std::size_t c = 0; c < index.dim; ++c)
            if (!(in >> index.medoid_points.values[j * index.dim + c]))
                throw DataError("medoid index: truncated medoid coordinates");
    }
    index.neighbour_lists.resize(k);
    const std::size_t list_len = std::min(index.k_nn, k - 1);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t ord = 0;
        if (!(in >> tok >> ord) || tok != "neighbours" || ord != j)
            throw DataError("medoid index: malformed neighbour list " + std::to_string(j));
        index.neighbour_lists[j].resize(list_len);
        for (std::size_t t = 0; t < list_len; ++t)
            if (!(in >> index.neighbour_lists[j][t]))
                throw DataError("medoid index: truncated neighbour list");
    }
    return index;
}

}  // namespace relia::nbhd
