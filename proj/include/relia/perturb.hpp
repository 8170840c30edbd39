#pragma once

#include <span>
#include <vector>

#include "relia/rng.hpp"

namespace relia::nbhd {

/// Beta(a, b) draw via the two-gamma ratio.
double sample_beta(double a, double b, Rng& rng);

/// Per-feature mixing coefficients lambda_bar ~ Beta(100*lambda, 100*(1-lambda)).
/// The Beta mean equals lambda, so lambda plays the role of the per-feature
/// perturbation probability.
std::vector<double> sample_mixing_coefficients(double lambda, std::size_t m, Rng& rng);

/// x_tilde_j = (1 - lambda_bar_j) * x_j + lambda_bar_j * x_mix_j, clamped to
/// the closed interval between the endpoints so containment holds exactly.
std::vector<double> interpolate_toward(std::span<const double> x, std::span<const double> x_mix,
                                       std::span<const double> mixing);

/// One perturbation toward the mixing medoid. per_point_lambda draws a single
/// shared coefficient instead of one per feature.
std::vector<double> perturb_once(std::span<const double> x, std::span<const double> x_mix,
                                 double lambda, Rng& rng, bool per_point_lambda = false);

}  // namespace relia::nbhd
