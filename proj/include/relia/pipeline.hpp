#pragma once

#include <string>
#include <vector>

#include "relia/run_config.hpp"

namespace relia::cli {

// Artifact locations inside a run directory.
std::string dataset_path(const std::string& out_dir);
std::string splits_path(const std::string& out_dir);
std::string model_path(const std::string& out_dir);
std::string loss_history_path(const std::string& out_dir);
std::string f1_report_path(const std::string& out_dir);
std::string index_path(const std::string& out_dir);
std::string lambda_table_path(const std::string& out_dir);
std::string scores_path(const std::string& out_dir);
std::string summary_path(const std::string& out_dir);
std::string histogram_path(const std::string& out_dir);
std::string exclusions_path(const std::string& out_dir);
std::string attributions_path(const std::string& out_dir);
std::string attributions_meta_path(const std::string& out_dir);
std::string neighbourhood_dump_path(const std::string& out_dir);
std::string report_path(const std::string& out_dir);
std::string manifest_path(const std::string& out_dir);

void cmd_synth(const RunConfig& cfg, const std::string& out_dir);
void cmd_split(const RunConfig& cfg, const std::string& out_dir);
void cmd_train(const RunConfig& cfg, const std::string& out_dir);
void cmd_build_index(const RunConfig& cfg, const std::string& out_dir);

struct TuneRow {
    double lambda = 0.0;
    std::size_t generated = 0;
    std::size_t preserved = 0;
    double rate = 0.0;
};

struct TuneResult {
    std::vector<TuneRow> rows;
    double chosen_lambda = 0.0;  // largest lambda meeting the threshold, else best rate
    bool any_passed = false;
    double threshold = 0.95;
};

/// Measures class-preservation acceptance on validation minority points for
/// each lambda and picks the largest one with rate >= 0.95.
TuneResult cmd_tune_lambda(const RunConfig& cfg, const std::string& out_dir,
                           std::vector<double> grid = {});

void cmd_evaluate(const RunConfig& cfg, const std::string& out_dir);

/// Renders the consolidated run summary, writes report.txt and returns it.
std::string cmd_report(const std::string& out_dir);

}  // namespace relia::cli
