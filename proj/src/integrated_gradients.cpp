#include "relia/integrated_gradients.hpp"

#include "relia/errors.hpp"

namespace relia::attr {

Attribution integrated_gradients(const net::MlpModel& model, std::span<const double> x,
                                 const IgParams& params) {
    const std::size_t m = model.input_dim();
    if (x.size() != m || params.baseline.size() != m)
        throw ConfigError("ig: input/baseline length does not match model input dim");
    if (params.steps < 2) throw ConfigError("ig: steps must be >= 2");

    std::vector<double> mean_grad(m, 0.0);
    std::vector<double> point(m);
    for (std::size_t k = 0; k < params.steps; ++k) {
        const double t = (static_cast<double>(k) + 0.5) / static_cast<double>(params.steps);
        for (std::size_t j = 0; j < m; ++j)
            point[j] = params.baseline[j] + t * (x[j] - params.baseline[j]);
        const auto trace = net::forward(model, point);
        const auto grad = net::grad_input(model, trace);
        for (std::size_t j = 0; j < m; ++j) mean_grad[j] += grad[j];
    }

    Attribution out;
    out.method = Method::integrated_gradients;
    out.baseline = params.baseline;
    out.meta["steps"] = static_cast<double>(params.steps);
    out.values.resize(m);
    const double inv_steps = 1.0 / static_cast<double>(params.steps);
    for (std::size_t j = 0; j < m; ++j)
        out.values[j] = (x[j] - params.baseline[j]) * mean_grad[j] * inv_steps;
    out.degenerate = out.is_zero();
    return out;
}

}  // namespace relia::attr
