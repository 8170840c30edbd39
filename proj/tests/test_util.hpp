#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "relia/mlp.hpp"
#include "relia/rng.hpp"

namespace testutil {

/// Random model with the given layer widths, uniform weights/biases in
/// [-scale, scale], ReLU hidden layers and the chosen head.
inline relia::net::MlpModel random_model(const std::vector<std::size_t>& dims, std::uint64_t seed,
                                         double scale = 0.8,
                                         relia::net::Activation head = relia::net::Activation::sigmoid,
                                         bool with_bias = true) {
    relia::Rng rng(seed);
    std::uniform_real_distribution<double> u(-scale, scale);
    relia::net::MlpModel model;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
        relia::net::Layer l;
        l.in = dims[k];
        l.out = dims[k + 1];
        l.act = (k + 2 == dims.size()) ? head : relia::net::Activation::relu;
        l.weights.resize(l.in * l.out);
        for (double& w : l.weights) w = u(rng);
        l.biases.assign(l.out, 0.0);
        if (with_bias)
            for (double& b : l.biases) b = u(rng);
        model.layers.push_back(std::move(l));
    }
    return model;
}

inline std::vector<double> random_vector(std::size_t n, std::uint64_t seed, double scale = 1.0) {
    relia::Rng rng(seed);
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

/// Central finite differences of the model output w.r.t. the input.
inline std::vector<double> fd_gradient(const relia::net::MlpModel& model,
                                       const std::vector<double>& x, double h = 1e-5) {
    std::vector<double> g(x.size());
    std::vector<double> probe = x;
    for (std::size_t j = 0; j < x.size(); ++j) {
        probe[j] = x[j] + h;
        const double up = relia::net::forward(model, probe).p;
        probe[j] = x[j] - h;
        const double down = relia::net::forward(model, probe).p;
        probe[j] = x[j];
        g[j] = (up - down) / (2.0 * h);
    }
    return g;
}

/// True when every hidden ReLU pre-activation is at least `margin` from 0,
/// so finite differences cannot cross a kink.
inline bool away_from_kinks(const relia::net::MlpModel& model, const std::vector<double>& x,
                            double margin = 1e-3) {
    const auto trace = relia::net::forward(model, x);
    for (std::size_t k = 0; k < model.layers.size(); ++k) {
        if (model.layers[k].act != relia::net::Activation::relu) continue;
        for (double z : trace.pre[k])
            if (std::abs(z) < margin) return false;
    }
    return true;
}

class TempDir {
public:
    explicit TempDir(const std::string& name) {
        path_ = (std::filesystem::temp_directory_path() / ("relia_test_" + name)).string();
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::string& path() const { return path_; }
    std::string file(const std::string& name) const { return path_ + "/" + name; }

private:
    std::string path_;
};

}  // namespace testutil
