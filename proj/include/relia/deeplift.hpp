#pragma once

#include <span>

#include "relia/attribution.hpp"
#include "relia/mlp.hpp"

namespace relia::attr {

/// DeepLIFT with the Rescale rule. Each activation's multiplier is the
/// secant slope delta_act / delta_pre between the input's and the baseline's
/// forward passes; when |delta_pre| <= stability_threshold it switches to the
/// exact derivative at the reference. Attributions satisfy
/// summation-to-delta: sum_j attr_j = p(x) - p(baseline).
Attribution deeplift_rescale(const net::MlpModel& model, std::span<const double> x,
                             std::span<const double> baseline,
                             double stability_threshold = 1e-9);

}  // namespace relia::attr
