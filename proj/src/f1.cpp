#include "relia/f1.hpp"

#include "relia/errors.hpp"

namespace relia::net {

ConfusionCounts confusion_counts(const std::vector<int>& preds, const std::vector<int>& labels,
                                 int positive_class) {
    if (preds.size() != labels.size())
        throw DataError("f1: prediction/label length mismatch");
    ConfusionCounts c;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const bool pred_pos = preds[i] == positive_class;
        const bool is_pos = labels[i] == positive_class;
        if (pred_pos && is_pos)
            ++c.tp;
        else if (pred_pos)
            ++c.fp;
        else if (is_pos)
            ++c.fn;
        else
            ++c.tn;
    }
    return c;
}

double f1_score(const std::vector<int>& preds, const std::vector<int>& labels, int positive_class) {
    const ConfusionCounts c = confusion_counts(preds, labels, positive_class);
    const double denom = static_cast<double>(2 * c.tp + c.fp + c.fn);
    if (denom == 0.0) return 0.0;
    return 2.0 * static_cast<double>(c.tp) / denom;
}

}  // namespace relia::net
