#include "relia/deeplift.hpp"

#include <cmath>

#include "relia/errors.hpp"

namespace relia::attr {

namespace {

double exact_derivative(net::Activation act, double z, double post) {
    switch (act) {
        case net::Activation::relu: return z > 0.0 ? 1.0 : 0.0;
        case net::Activation::sigmoid: return post * (1.0 - post);
        case net::Activation::identity: return 1.0;
    }
    return 0.0;
}

}  // namespace

Attribution deeplift_rescale(const net::MlpModel& model, std::span<const double> x,
                             std::span<const double> baseline, double stability_threshold) {
    const std::size_t m = model.input_dim();
    if (x.size() != m || baseline.size() != m)
        throw ConfigError("deeplift: input/baseline length does not match model input dim");

    const net::ForwardTrace tx = net::forward(model, x);
    const net::ForwardTrace tb = net::forward(model, baseline);

    // nu = multiplier of the output w.r.t. the current layer's pre-activations.
    const std::size_t n_layers = model.layers.size();
    std::vector<double> nu;
    for (std::size_t k = n_layers; k-- > 0;) {
        const auto& l = model.layers[k];

        // mu = multiplier w.r.t. this layer's post-activations.
        std::vector<double> mu(l.out);
        if (k + 1 == n_layers) {
            mu.assign(l.out, 1.0);
        } else {
            const auto& above = model.layers[k + 1];
            for (std::size_t i = 0; i < l.out; ++i) {
                double s = 0.0;
                for (std::size_t o = 0; o < above.out; ++o)
                    s += above.weights[o * above.in + i] * nu[o];
                mu[i] = s;
            }
        }

        nu.assign(l.out, 0.0);
        for (std::size_t o = 0; o < l.out; ++o) {
            const double dz = tx.pre[k][o] - tb.pre[k][o];
            double slope;
            if (std::abs(dz) > stability_threshold)
                slope = (tx.post[k][o] - tb.post[k][o]) / dz;
            else
                slope = exact_derivative(l.act, tb.pre[k][o], tb.post[k][o]);
            nu[o] = mu[o] * slope;
        }
    }

    Attribution out;
    out.method = Method::deeplift;
    out.baseline.emplace(baseline.begin(), baseline.end());
    out.values.resize(m);
    const auto& first = model.layers.front();
    for (std::size_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (std::size_t o = 0; o < first.out; ++o) s += first.weights[o * first.in + j] * nu[o];
        out.values[j] = s * (x[j] - baseline[j]);
    }
    out.degenerate = out.is_zero();
    return out;
}

}  // namespace relia::attr
