#include "relia/mlp.hpp"

#include <cmath>
#include <random>

#include "relia/errors.hpp"
#include "relia/rng.hpp"

namespace relia::net {

std::string activation_name(Activation a) {
    switch (a) {
        case Activation::relu: return "relu";
        case Activation::sigmoid: return "sigmoid";
        case Activation::identity: return "identity";
    }
    return "?";
}

Activation activation_from_name(const std::string& name) {
    if (name == "relu") return Activation::relu;
    if (name == "sigmoid") return Activation::sigmoid;
    if (name == "identity") return Activation::identity;
    throw ConfigError("mlp: unknown activation '" + name + "'");
}

std::size_t MlpModel::parameter_count() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.weights.size() + l.biases.size();
    return n;
}

void MlpModel::validate() const {
    if (layers.empty()) throw ConfigError("mlp: model has no layers");
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const auto& l = layers[k];
        if (l.in == 0 || l.out == 0) throw ConfigError("mlp: zero-width layer " + std::to_string(k));
        if (l.weights.size() != l.in * l.out || l.biases.size() != l.out)
            throw ConfigError("mlp: parameter shape mismatch in layer " + std::to_string(k));
        if (k > 0 && layers[k - 1].out != l.in)
            throw ConfigError("mlp: layer dims do not chain between layers " +
                              std::to_string(k - 1) + " and " + std::to_string(k));
        for (double w : l.weights)
            if (!std::isfinite(w)) throw ConfigError("mlp: non-finite weight in layer " + std::to_string(k));
        for (double b : l.biases)
            if (!std::isfinite(b)) throw ConfigError("mlp: non-finite bias in layer " + std::to_string(k));
    }
}

MlpModel make_mlp(std::size_t input_dim, const std::vector<std::size_t>& hidden, std::uint64_t seed) {
    std::vector<std::size_t> dims;
    dims.push_back(input_dim);
    dims.insert(dims.end(), hidden.begin(), hidden.end());
    dims.push_back(1);

    Rng rng(derive_seed(seed, "mlp-init"));
    MlpModel model;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
        Layer l;
        l.in = dims[k];
        l.out = dims[k + 1];
        l.act = (k + 2 == dims.size()) ? Activation::sigmoid : Activation::relu;
        const double scale = 1.0 / std::sqrt(static_cast<double>(l.in));
        std::uniform_real_distribution<double> u(-scale, scale);
        l.weights.resize(l.in * l.out);
        for (double& w : l.weights) w = u(rng);
        l.biases.assign(l.out, 0.0);
        model.layers.push_back(std::move(l));
    }
    model.validate();
    return model;
}

namespace {

double apply_activation(Activation a, double z) {
    switch (a) {
        case Activation::relu: return z > 0.0 ? z : 0.0;
        case Activation::sigmoid: return 1.0 / (1.0 + std::exp(-z));
        case Activation::identity: return z;
    }
    return z;
}

double activation_derivative(Activation a, double z, double post) {
    switch (a) {
        case Activation::relu: return z > 0.0 ? 1.0 : 0.0;
        case Activation::sigmoid: return post * (1.0 - post);
        case Activation::identity: return 1.0;
    }
    return 0.0;
}

}  // namespace

ForwardTrace forward(const MlpModel& model, std::span<const double> x) {
    if (x.size() != model.input_dim())
        throw ConfigError("mlp: input length " + std::to_string(x.size()) +
                          " does not match model input dim " + std::to_string(model.input_dim()));
    for (double v : x)
        if (!std::isfinite(v)) throw ConfigError("mlp: non-finite input value");

    ForwardTrace trace;
    trace.input.assign(x.begin(), x.end());
    trace.pre.reserve(model.layers.size());
    trace.post.reserve(model.layers.size());

    const std::vector<double>* a = &trace.input;
    for (const auto& l : model.layers) {
        std::vector<double> z(l.out);
        for (std::size_t o = 0; o < l.out; ++o) {
            double s = l.biases[o];
            const double* w = &l.weights[o * l.in];
            for (std::size_t i = 0; i < l.in; ++i) s += w[i] * (*a)[i];
            z[o] = s;
        }
        std::vector<double> post(l.out);
        for (std::size_t o = 0; o < l.out; ++o) post[o] = apply_activation(l.act, z[o]);
        trace.pre.push_back(std::move(z));
        trace.post.push_back(std::move(post));
        a = &trace.post.back();
    }
    trace.p = trace.post.back()[0];
    return trace;
}

std::vector<double> grad_input(const MlpModel& model, const ForwardTrace& trace) {
    if (trace.pre.size() != model.layers.size() || trace.input.size() != model.input_dim())
        throw ConfigError("mlp: trace does not match model");

    // delta = d p / d z for the current layer, walked back to the input.
    std::vector<double> delta(model.layers.back().out);
    {
        const auto& l = model.layers.back();
        for (std::size_t o = 0; o < l.out; ++o)
            delta[o] = activation_derivative(l.act, trace.pre.back()[o], trace.post.back()[o]);
    }
    for (std::size_t k = model.layers.size(); k-- > 0;) {
        const auto& l = model.layers[k];
        std::vector<double> prev(l.in, 0.0);
        for (std::size_t o = 0; o < l.out; ++o) {
            const double d = delta[o];
            if (d == 0.0) continue;
            const double* w = &l.weights[o * l.in];
            for (std::size_t i = 0; i < l.in; ++i) prev[i] += d * w[i];
        }
        if (k > 0) {
            const auto& below = model.layers[k - 1];
            for (std::size_t i = 0; i < l.in; ++i)
                prev[i] *= activation_derivative(below.act, trace.pre[k - 1][i], trace.post[k - 1][i]);
        }
        delta = std::move(prev);
    }
    return delta;
}

int predict_class(const MlpModel& model, std::span<const double> x, double threshold) {
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw ConfigError("mlp: threshold must lie in (0,1)");
    return forward(model, x).p >= threshold ? 1 : 0;
}

}  // namespace relia::net
