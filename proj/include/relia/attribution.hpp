#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace relia::attr {

enum class Method { integrated_gradients, deeplift, lrp, ensemble };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Per-feature relevance for one prediction. `degenerate` marks vanishing
/// (all-zero) outputs and fully cancelled ensembles; downstream rank metrics
/// treat those specially instead of failing.
struct Attribution {
    std::vector<double> values;
    Method method = Method::integrated_gradients;
    std::optional<std::vector<double>> baseline;
    std::map<std::string, double> meta;
    bool degenerate = false;

    bool is_zero() const;
};

}  // namespace relia::attr
