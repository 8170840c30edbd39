#pragma once

#include <string>

#include "relia/mlp.hpp"
#include "relia/standardize.hpp"

namespace relia::net {

/// A trained model together with the standardization fitted on its training
/// split; everything downstream (explainers, neighbourhoods) operates in that
/// standardized space.
struct SavedModel {
    MlpModel model;
    data::StandardizationStats stats;
};

/// Versioned text format; weights round-trip bit-exactly.
void save_model(const SavedModel& saved, const std::string& path);
SavedModel load_model(const std::string& path);

}  // namespace relia::net
