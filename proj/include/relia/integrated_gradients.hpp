#pragma once

#include <span>

#include "relia/attribution.hpp"
#include "relia/mlp.hpp"

namespace relia::attr {

struct IgParams {
    std::vector<double> baseline;
    std::size_t steps = 64;  // >= 2
};

/// Path-integral attribution along the straight line from the baseline to x,
/// using a midpoint Riemann sum over `steps` gradient evaluations:
///   attr_j ~= (x_j - b_j) * mean_k dp/dx_j at b + (k - 0.5)/steps * (x - b).
/// The completeness gap |sum_j attr_j - (p(x) - p(b))| shrinks as steps grows.
Attribution integrated_gradients(const net::MlpModel& model, std::span<const double> x,
                                 const IgParams& params);

}  // namespace relia::attr
