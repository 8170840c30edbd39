#pragma once

#include "relia/attribution.hpp"

namespace relia::attr {

/// Averages attributions after L1-normalizing each member. Zero-vector
/// members are dropped (and the drop reflected in `degenerate` only if
/// nothing remains meaningful); weights, when given, must match the member
/// count and sum to 1 and are renormalized over the surviving members.
/// Uniform weighting is the default.
Attribution ensemble(const std::vector<Attribution>& members,
                     const std::vector<double>* weights = nullptr);

}  // namespace relia::attr
