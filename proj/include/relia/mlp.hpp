#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace relia::net {

enum class Activation { relu, sigmoid, identity };

std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

struct Layer {
    std::size_t in = 0;
    std::size_t out = 0;
    std::vector<double> weights;  // row-major, out x in
    std::vector<double> biases;   // out
    Activation act = Activation::relu;
};

/// Fully connected network. The use-case model is five linear layers with
/// ReLU after the first four and a sigmoid head, but the type supports any
/// chained stack so tests can build small hand-checkable nets.
struct MlpModel {
    std::vector<Layer> layers;

    std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().in; }
    std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().out; }
    std::size_t parameter_count() const;

    /// Throws ConfigError if layer dims do not chain or parameters are non-finite.
    void validate() const;
};

/// Per-layer pre/post activations for one input, reused by backprop and the
/// explainers. p is the final output (a probability for sigmoid-head models).
struct ForwardTrace {
    std::vector<double> input;
    std::vector<std::vector<double>> pre;   // z_k per layer
    std::vector<std::vector<double>> post;  // act(z_k) per layer
    double p = 0.0;
};

/// Scaled uniform fan-in init (weights ~ U(-1/sqrt(in), 1/sqrt(in)), zero
/// biases), ReLU hidden layers, sigmoid head. hidden = widths between the
/// input and the scalar output.
MlpModel make_mlp(std::size_t input_dim, const std::vector<std::size_t>& hidden, std::uint64_t seed);

ForwardTrace forward(const MlpModel& model, std::span<const double> x);

/// d p / d x_j via backprop through the trace. ReLU subgradient at exactly 0
/// is taken as 0.
std::vector<double> grad_input(const MlpModel& model, const ForwardTrace& trace);

/// 1 iff forward(model, x).p >= threshold.
int predict_class(const MlpModel& model, std::span<const double> x, double threshold = 0.5);

}  // namespace relia::net
