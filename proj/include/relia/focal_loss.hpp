#pragma once

namespace relia::net {

/// Focal loss FL(p_t) = -alpha_t (1 - p_t)^gamma log(p_t), where p_t is the
/// probability assigned to the true class. For y = 0 the balanced form uses
/// p_t = 1 - p and alpha_t = 1 - alpha. Probabilities are clamped to
/// [1e-7, 1 - 1e-7] inside the loss only.
struct FocalLossParams {
    double gamma = 2.5;
    double alpha = 0.75;
};

double focal_loss(double p, int y, const FocalLossParams& params);

/// d focal_loss / d p at the clamped point (gradient of the loss w.r.t. the
/// predicted probability of class 1).
double focal_loss_grad_p(double p, int y, const FocalLossParams& params);

}  // namespace relia::net
