// Compares the OpenMP kernels against their serial references: PAM swap
// search, medoid index build, batched training and per-point scoring.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "relia/kmedoids.hpp"
#include "relia/reliability.hpp"
#include "relia/synthetic.hpp"
#include "relia/train.hpp"

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_call(F&& f) {
    const double t0 = now_seconds();
    f();
    return now_seconds() - t0;
}

}  // namespace

int main() {
    using namespace relia;

    std::printf("threads available: %d\n\n", omp_get_max_threads());

    data::SyntheticSpec spec;
    spec.n_points = 3000;
    spec.minority_freq = 0.05;
    spec.seed = 11;
    const data::Dataset dataset = data::generate_synthetic(spec);
    std::vector<std::size_t> all_rows(dataset.n_rows);
    for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
    const data::Matrix rows = data::gather_rows(dataset, all_rows);

    // PAM best-swap: naive full-recompute reference vs incremental kernel.
    {
        data::Matrix small = rows;
        small.n_rows = 400;
        small.values.resize(small.n_rows * small.n_cols);
        const auto seeded = nbhd::pam(small, 40, 7, 0);  // init + a few swaps
        std::vector<std::size_t> nearest(small.n_rows);
        std::vector<double> d1(small.n_rows), d2(small.n_rows);
        for (std::size_t i = 0; i < small.n_rows; ++i) {
            double b1 = 1e300, b2 = 1e300;
            std::size_t n1 = 0;
            for (std::size_t j = 0; j < seeded.medoids.size(); ++j) {
                const double d = nbhd::euclidean(small.row(i), small.row(seeded.medoids[j]));
                if (d < b1) {
                    b2 = b1;
                    b1 = d;
                    n1 = j;
                } else if (d < b2) {
                    b2 = d;
                }
            }
            nearest[i] = n1;
            d1[i] = b1;
            d2[i] = b2;
        }
        nbhd::BestSwap ref_swap, fast_swap;
        const double t_ref =
            time_call([&] { ref_swap = nbhd::best_swap_reference(small, seeded.medoids); });
        const double t_fast = time_call(
            [&] { fast_swap = nbhd::best_swap(small, seeded.medoids, nearest, d1, d2, true); });
        std::printf("best-swap search (n=%zu, k=%zu)\n", small.n_rows, seeded.medoids.size());
        std::printf("  reference (full recompute): %8.3f s  delta=%.6f\n", t_ref, ref_swap.delta);
        std::printf("  incremental + OpenMP:       %8.3f s  delta=%.6f\n\n", t_fast,
                    fast_swap.delta);
    }

    // Medoid index build, serial vs parallel.
    {
        nbhd::MedoidIndex serial, parallel;
        omp_set_num_threads(1);
        const double t_serial =
            time_call([&] { serial = nbhd::build_medoid_index(rows, 5, 7, false); });
        omp_set_num_threads(omp_get_num_procs());
        const double t_parallel =
            time_call([&] { parallel = nbhd::build_medoid_index(rows, 5, 7, true); });
        std::printf("medoid index build (n=%zu, k=%zu)\n", rows.n_rows,
                    serial.medoid_rows.size());
        std::printf("  serial:   %8.3f s  cost=%.4f\n", t_serial, serial.total_cost);
        std::printf("  parallel: %8.3f s  cost=%.4f  identical=%s\n\n", t_parallel,
                    parallel.total_cost,
                    serial.medoid_rows == parallel.medoid_rows ? "yes" : "NO");
    }

    // Training: per-sample gradients of a batch in parallel.
    {
        std::vector<int> labels = dataset.labels;
        net::TrainConfig cfg;
        cfg.epochs = 3;
        cfg.batch_size = 256;
        cfg.optimizer.learning_rate = 1e-3;
        cfg.seed = 5;
        const net::MlpModel init = net::make_mlp(rows.n_cols, {64, 32, 16, 8}, 3);
        net::TrainResult serial, parallel;
        omp_set_num_threads(1);
        const double t_serial =
            time_call([&] { serial = net::train(init, rows, labels, {}, cfg); });
        omp_set_num_threads(omp_get_num_procs());
        const double t_parallel =
            time_call([&] { parallel = net::train(init, rows, labels, {}, cfg); });
        bool identical = true;
        for (std::size_t k = 0; k < serial.model.layers.size(); ++k)
            if (serial.model.layers[k].weights != parallel.model.layers[k].weights)
                identical = false;
        std::printf("training (%zu rows, %zu epochs)\n", rows.n_rows, cfg.epochs);
        std::printf("  serial:   %8.3f s\n", t_serial);
        std::printf("  parallel: %8.3f s  identical=%s\n\n", t_parallel, identical ? "yes" : "NO");
    }

    return 0;
}
