#include "relia/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "relia/errors.hpp"
#include "relia/rng.hpp"

namespace relia::net {

namespace {

std::vector<double> pack_params(const MlpModel& model) {
    std::vector<double> theta;
    theta.reserve(model.parameter_count());
    for (const auto& l : model.layers) {
        theta.insert(theta.end(), l.weights.begin(), l.weights.end());
        theta.insert(theta.end(), l.biases.begin(), l.biases.end());
    }
    return theta;
}

void unpack_params(MlpModel& model, const std::vector<double>& theta) {
    std::size_t pos = 0;
    for (auto& l : model.layers) {
        std::copy_n(theta.begin() + static_cast<std::ptrdiff_t>(pos), l.weights.size(),
                    l.weights.begin());
        pos += l.weights.size();
        std::copy_n(theta.begin() + static_cast<std::ptrdiff_t>(pos), l.biases.size(),
                    l.biases.begin());
        pos += l.biases.size();
    }
}

// Gradient of the focal loss w.r.t. all parameters for one sample, written
// into grad (pre-zeroed, packed layout). Returns the sample loss.
double sample_gradient(const MlpModel& model, std::span<const double> x, int y,
                       const FocalLossParams& loss, double* grad) {
    const ForwardTrace trace = forward(model, x);
    const double loss_value = focal_loss(trace.p, y, loss);
    const double dl_dp = focal_loss_grad_p(trace.p, y, loss);

    // delta = d loss / d z for the current layer.
    std::vector<double> delta(model.layers.back().out);
    {
        const auto& l = model.layers.back();
        const double z = trace.pre.back()[0];
        const double post = trace.post.back()[0];
        double da_dz = 1.0;
        if (l.act == Activation::sigmoid)
            da_dz = post * (1.0 - post);
        else if (l.act == Activation::relu)
            da_dz = z > 0.0 ? 1.0 : 0.0;
        delta[0] = dl_dp * da_dz;
    }

    // Offsets of each layer's weight block in the packed layout.
    std::vector<std::size_t> offsets(model.layers.size());
    std::size_t pos = 0;
    for (std::size_t k = 0; k < model.layers.size(); ++k) {
        offsets[k] = pos;
        pos += model.layers[k].weights.size() + model.layers[k].biases.size();
    }

    for (std::size_t k = model.layers.size(); k-- > 0;) {
        const auto& l = model.layers[k];
        const std::vector<double>& activation_in = k == 0 ? trace.input : trace.post[k - 1];
        double* gw = grad + offsets[k];
        double* gb = gw + l.weights.size();
        std::vector<double> prev(l.in, 0.0);
        for (std::size_t o = 0; o < l.out; ++o) {
            const double d = delta[o];
            gb[o] += d;
            double* gwo = gw + o * l.in;
            const double* w = &l.weights[o * l.in];
            for (std::size_t i = 0; i < l.in; ++i) {
                gwo[i] += d * activation_in[i];
                prev[i] += d * w[i];
            }
        }
        if (k > 0) {
            const auto& below = model.layers[k - 1];
            for (std::size_t i = 0; i < l.in; ++i) {
                const double z = trace.pre[k - 1][i];
                if (below.act == Activation::relu)
                    prev[i] = z > 0.0 ? prev[i] : 0.0;
                else if (below.act == Activation::sigmoid) {
                    const double post = trace.post[k - 1][i];
                    prev[i] *= post * (1.0 - post);
                }
            }
            delta = std::move(prev);
        }
    }
    return loss_value;
}

}  // namespace

TrainResult train(const MlpModel& model, const data::Matrix& features,
                  const std::vector<int>& labels, const FocalLossParams& loss,
                  const TrainConfig& cfg) {
    model.validate();
    if (features.n_rows == 0) throw DataError("train: empty training set");
    if (features.n_rows != labels.size())
        throw DataError("train: feature/label row count mismatch");
    if (features.n_cols != model.input_dim())
        throw DataError("train: feature width does not match model input dim");
    const auto ones = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
    if (ones == 0 || ones == labels.size())
        throw DataError("train: training set must contain both classes");
    if (cfg.epochs == 0 || cfg.batch_size == 0)
        throw ConfigError("train: epochs and batch_size must be >= 1");

    TrainResult result;
    result.model = model;
    std::vector<double> theta = pack_params(result.model);
    const std::size_t n_params = theta.size();
    RAdam opt(n_params, cfg.optimizer);

    const std::size_t n = features.n_rows;
    const std::size_t max_batch = std::min(cfg.batch_size, n);
    std::vector<double> grad_slabs(max_batch * n_params);
    std::vector<double> sample_losses(max_batch);
    std::vector<double> batch_grad(n_params);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        Rng shuffle_rng(derive_seed(cfg.seed, "train-shuffle", epoch));
        std::shuffle(order.begin(), order.end(), shuffle_rng);

        double epoch_loss_sum = 0.0;
        for (std::size_t start = 0; start < n; start += cfg.batch_size) {
            const std::size_t count = std::min(cfg.batch_size, n - start);
            std::fill(grad_slabs.begin(), grad_slabs.begin() + static_cast<std::ptrdiff_t>(count * n_params), 0.0);

#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(count); ++b) {
                const std::size_t r = order[start + static_cast<std::size_t>(b)];
                sample_losses[static_cast<std::size_t>(b)] =
                    sample_gradient(result.model, features.row(r), labels[r], loss,
                                    grad_slabs.data() + static_cast<std::size_t>(b) * n_params);
            }

            // Ordered reduction keeps results independent of thread count.
            std::fill(batch_grad.begin(), batch_grad.end(), 0.0);
            for (std::size_t b = 0; b < count; ++b) {
                const double* slab = grad_slabs.data() + b * n_params;
                for (std::size_t i = 0; i < n_params; ++i) batch_grad[i] += slab[i];
                epoch_loss_sum += sample_losses[b];
            }
            const double inv = 1.0 / static_cast<double>(count);
            for (double& g : batch_grad) g *= inv;

            opt.step(theta, batch_grad);
            unpack_params(result.model, theta);
        }
        const double epoch_mean = epoch_loss_sum / static_cast<double>(n);
        if (!std::isfinite(epoch_mean))
            throw DataError("train: loss diverged at epoch " + std::to_string(epoch));
        result.epoch_loss.push_back(epoch_mean);
    }
    return result;
}

double mean_loss(const MlpModel& model, const data::Matrix& features,
                 const std::vector<int>& labels, const FocalLossParams& loss) {
    if (features.n_rows == 0) throw DataError("mean_loss: empty row set");
    double sum = 0.0;
    for (std::size_t i = 0; i < features.n_rows; ++i)
        sum += focal_loss(forward(model, features.row(i)).p, labels[i], loss);
    return sum / static_cast<double>(features.n_rows);
}

}  // namespace relia::net
