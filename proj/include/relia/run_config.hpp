#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relia/attribution.hpp"
#include "relia/focal_loss.hpp"
#include "relia/neighbourhood.hpp"
#include "relia/reliability.hpp"
#include "relia/split.hpp"
#include "relia/synthetic.hpp"
#include "relia/train.hpp"

namespace relia::cli {

struct DatasetConfig {
    std::string source = "synthetic";  // "synthetic" | "csv"
    std::string csv_path;
    std::string label_column = "label";
    std::string group_column = "group";
    data::SyntheticSpec synthetic;
};

struct ModelConfig {
    std::vector<std::size_t> hidden = {64, 32, 16, 8};
};

struct EvaluateConfig {
    std::vector<attr::Method> methods = {attr::Method::integrated_gradients,
                                         attr::Method::deeplift, attr::Method::lrp,
                                         attr::Method::ensemble};
    std::string generator = "medoid";  // "medoid" | "gaussian" | "both"
    std::string classes = "minority";  // "minority" | "both"
    std::size_t ig_steps = 64;
    double lrp_epsilon = 1e-6;
    metrics::EnsembleWeighting ensemble_weighting = metrics::EnsembleWeighting::uniform;
    bool dump_neighbourhoods = false;
};

/// Resolved configuration for a whole run. Stage seeds are derived from the
/// single global seed; the seed fields nested in sub-configs are filled in by
/// the pipeline, not read from the file.
struct RunConfig {
    std::uint64_t seed = 0;
    DatasetConfig dataset;
    data::SplitSpec split;
    ModelConfig model;
    net::TrainConfig train;
    net::FocalLossParams focal;
    nbhd::PerturbConfig perturb;
    std::size_t k_nn = 5;
    nbhd::GaussianConfig gaussian;
    EvaluateConfig evaluate;

    void validate() const;

    static RunConfig from_file(const std::string& path);
    static RunConfig from_json_text(const std::string& text);
    std::string to_json_text() const;
};

}  // namespace relia::cli
