#pragma once

#include <span>

#include "relia/attribution.hpp"
#include "relia/mlp.hpp"

namespace relia::attr {

struct LrpParams {
    double epsilon = 1e-6;  // > 0
};

/// Layer-wise relevance propagation with the epsilon rule. Relevance starts
/// at the last linear layer's pre-activation (the pre-sigmoid logit) and is
/// redistributed backwards through each linear layer as
///   R_i = sum_k a_i w_ik / (z_k + eps * sign(z_k)) * R_k,
/// with sign(0) taken as +1. Elementwise activations pass relevance through
/// unchanged; relevance is conserved per layer up to the epsilon (and bias)
/// leak.
Attribution lrp_epsilon(const net::MlpModel& model, std::span<const double> x,
                        const LrpParams& params);

}  // namespace relia::attr
