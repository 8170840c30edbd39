#include "relia/attribution.hpp"

#include "relia/errors.hpp"

namespace relia::attr {

std::string method_name(Method m) {
    switch (m) {
        case Method::integrated_gradients: return "ig";
        case Method::deeplift: return "deeplift";
        case Method::lrp: return "lrp";
        case Method::ensemble: return "ensemble";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "ig" || name == "integrated_gradients") return Method::integrated_gradients;
    if (name == "deeplift") return Method::deeplift;
    if (name == "lrp") return Method::lrp;
    if (name == "ensemble") return Method::ensemble;
    throw ConfigError("attribution: unknown method '" + name + "'");
}

bool Attribution::is_zero() const {
    for (double v : values)
        if (v != 0.0) return false;
    return true;
}

}  // namespace relia::attr
