#include "relia/lrp.hpp"

#include <cmath>

#include "relia/errors.hpp"

namespace relia::attr {

Attribution lrp_epsilon(const net::MlpModel& model, std::span<const double> x,
                        const LrpParams& params) {
    if (!(params.epsilon > 0.0)) throw ConfigError("lrp: epsilon must be positive");
    const std::size_t m = model.input_dim();
    const net::ForwardTrace trace = net::forward(model, x);

    // Output relevance: the pre-sigmoid logit of the last layer.
    std::vector<double> relevance = {trace.pre.back()[0]};
    if (model.layers.back().out != 1)
        relevance = trace.pre.back();

    for (std::size_t k = model.layers.size(); k-- > 0;) {
        const auto& l = model.layers[k];
        const std::vector<double>& activation_in = k == 0 ? trace.input : trace.post[k - 1];
        std::vector<double> below(l.in, 0.0);
        for (std::size_t o = 0; o < l.out; ++o) {
            const double z = trace.pre[k][o];
            const double sign = z < 0.0 ? -1.0 : 1.0;
            const double share = relevance[o] / (z + params.epsilon * sign);
            const double* w = &l.weights[o * l.in];
            for (std::size_t i = 0; i < l.in; ++i) below[i] += activation_in[i] * w[i] * share;
        }
        relevance = std::move(below);
    }

    Attribution out;
    out.method = Method::lrp;
    out.meta["epsilon"] = params.epsilon;
    out.values = std::move(relevance);
    out.values.resize(m);
    out.degenerate = out.is_zero();
    return out;
}

}  // namespace relia::attr
