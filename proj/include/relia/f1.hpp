#pragma once

#include <cstddef>
#include <vector>

namespace relia::net {

/// F1 for the designated class: harmonic mean of precision and recall.
/// Defined as 0 whenever precision + recall is 0, including the case where
/// the class is never predicted and never occurs.
double f1_score(const std::vector<int>& preds, const std::vector<int>& labels, int positive_class);

struct ConfusionCounts {
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
};

ConfusionCounts confusion_counts(const std::vector<int>& preds, const std::vector<int>& labels,
                                 int positive_class);

}  // namespace relia::net
