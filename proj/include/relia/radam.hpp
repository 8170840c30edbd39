#pragma once

#include <cstddef>
#include <vector>

namespace relia::net {

struct RAdamParams {
    double learning_rate = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Rectified adaptive moment estimation. While the moving-average variance
/// estimate is not yet reliable (rho_t <= 4) the step degrades to plain
/// bias-corrected momentum; once rho_t > 4 the variance-rectified adaptive
/// step is used.
class RAdam {
public:
    RAdam(std::size_t n_params, const RAdamParams& params);

    /// One update over the full flat parameter vector.
    void step(std::vector<double>& theta, const std::vector<double>& grad);

    std::size_t steps_taken() const { return t_; }

private:
    RAdamParams params_;
    double rho_inf_;
    std::size_t t_ = 0;
    std::vector<double> m_;
    std::vector<double> v_;
};

}  // namespace relia::net
