// Command-line front end for the pipeline: synth -> split -> train ->
// build-index -> tune-lambda -> evaluate -> report, all reading/writing one
// run directory.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "relia/errors.hpp"
#include "relia/pipeline.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDataError = 2,
    kStageFailure = 3,
    kTuneWarning = 4,
};

struct CommonArgs {
    std::string config_path;
    std::string out_dir = "run";
    std::int64_t seed = -1;  // -1 = keep config value
};

relia::cli::RunConfig resolve_config(const CommonArgs& args) {
    relia::cli::RunConfig cfg;
    if (!args.config_path.empty()) cfg = relia::cli::RunConfig::from_file(args.config_path);
    if (args.seed >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed);
    return cfg;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON run configuration");
    cmd->add_option("--out", args.out_dir, "run directory for artifacts");
    cmd->add_option("--seed", args.seed, "override the global seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relia: reliability evaluation of feature-attribution explanations"};
    app.require_subcommand(1);

    CommonArgs args;
    std::vector<double> grid;
    std::string methods_csv, generator, classes;

    auto* synth = app.add_subcommand("synth", "generate the synthetic dataset");
    add_common(synth, args);
    auto* split = app.add_subcommand("split", "group-stratified train/val/test split");
    add_common(split, args);
    auto* train = app.add_subcommand("train", "train the model and report F1 per split");
    add_common(train, args);
    auto* build_index = app.add_subcommand("build-index", "k-medoids index over the validation split");
    add_common(build_index, args);
    auto* tune = app.add_subcommand("tune-lambda", "pick the largest lambda with >=95% class preservation");
    add_common(tune, args);
    tune->add_option("--grid", grid, "lambda grid to evaluate");
    auto* evaluate = app.add_subcommand("evaluate", "score robustness and consistency per test point");
    add_common(evaluate, args);
    evaluate->add_option("--methods", methods_csv, "comma-separated: ig,deeplift,lrp,ensemble");
    evaluate->add_option("--generator", generator, "medoid, gaussian or both");
    evaluate->add_option("--classes", classes, "minority or both");
    auto* report = app.add_subcommand("report", "consolidated text report of a run directory");
    add_common(report, args);

    CLI11_PARSE(app, argc, argv);

    try {
        relia::cli::RunConfig cfg = resolve_config(args);
        if (!methods_csv.empty()) {
            cfg.evaluate.methods.clear();
            std::stringstream ss(methods_csv);
            std::string tok;
            while (std::getline(ss, tok, ','))
                cfg.evaluate.methods.push_back(relia::attr::method_from_name(tok));
        }
        if (!generator.empty()) cfg.evaluate.generator = generator;
        if (!classes.empty()) cfg.evaluate.classes = classes;
        cfg.validate();

        if (synth->parsed()) {
            relia::cli::cmd_synth(cfg, args.out_dir);
            std::cout << "wrote " << relia::cli::dataset_path(args.out_dir) << '\n';
        } else if (split->parsed()) {
            relia::cli::cmd_split(cfg, args.out_dir);
            std::cout << "wrote " << relia::cli::splits_path(args.out_dir) << '\n';
        } else if (train->parsed()) {
            relia::cli::cmd_train(cfg, args.out_dir);
            std::cout << "wrote " << relia::cli::model_path(args.out_dir) << '\n';
        } else if (build_index->parsed()) {
            relia::cli::cmd_build_index(cfg, args.out_dir);
            std::cout << "wrote " << relia::cli::index_path(args.out_dir) << '\n';
        } else if (tune->parsed()) {
            const auto result = relia::cli::cmd_tune_lambda(cfg, args.out_dir, grid);
            for (const auto& row : result.rows)
                std::printf("lambda=%-8g rate=%.4f (%zu/%zu)\n", row.lambda, row.rate,
                            row.preserved, row.generated);
            std::printf("chosen lambda: %g%s\n", result.chosen_lambda,
                        result.any_passed ? "" : " (below threshold; best available)");
            if (!result.any_passed) {
                std::cerr << "warning: no lambda reached the " << result.threshold
                          << " acceptance threshold\n";
                return kTuneWarning;
            }
        } else if (evaluate->parsed()) {
            relia::cli::cmd_evaluate(cfg, args.out_dir);
            std::cout << "wrote " << relia::cli::scores_path(args.out_dir) << '\n';
        } else if (report->parsed()) {
            std::cout << relia::cli::cmd_report(args.out_dir);
        }
        return kOk;
    } catch (const relia::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const relia::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "stage failure: " << e.what() << '\n';
        return kStageFailure;
    }
}
