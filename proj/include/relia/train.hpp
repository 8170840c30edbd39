#pragma once

#include <cstdint>
#include <vector>

#include "relia/dataset.hpp"
#include "relia/focal_loss.hpp"
#include "relia/mlp.hpp"
#include "relia/radam.hpp"

namespace relia::net {

struct TrainConfig {
    std::size_t epochs = 100;
    std::size_t batch_size = 256;
    RAdamParams optimizer;  // learning rate 1e-4 by default
    std::uint64_t seed = 0;
};

struct TrainResult {
    MlpModel model;
    std::vector<double> epoch_loss;  // mean focal loss per epoch
};

/// Mini-batch training with the rectified adaptive optimizer. Shuffling is
/// deterministic given the seed. Per-sample gradients inside a batch are
/// computed in parallel but reduced in sample order, so the result is
/// bit-identical for any thread count.
TrainResult train(const MlpModel& model, const data::Matrix& features,
                  const std::vector<int>& labels, const FocalLossParams& loss,
                  const TrainConfig& cfg);

/// Mean focal loss of the model over a row set.
double mean_loss(const MlpModel& model, const data::Matrix& features,
                 const std::vector<int>& labels, const FocalLossParams& loss);

}  // namespace relia::net
