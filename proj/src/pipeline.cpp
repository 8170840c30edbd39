#include "relia/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "relia/csv.hpp"
#include "relia/errors.hpp"
#include "relia/f1.hpp"
#include "relia/model_io.hpp"

namespace relia::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string dataset_path(const std::string& d) { return d + "/dataset.csv"; }
std::string splits_path(const std::string& d) { return d + "/splits.csv"; }
std::string model_path(const std::string& d) { return d + "/model.txt"; }
std::string loss_history_path(const std::string& d) { return d + "/loss_history.csv"; }
std::string f1_report_path(const std::string& d) { return d + "/f1_report.csv"; }
std::string index_path(const std::string& d) { return d + "/medoid_index.txt"; }
std::string lambda_table_path(const std::string& d) { return d + "/lambda_table.csv"; }
std::string scores_path(const std::string& d) { return d + "/scores.csv"; }
std::string summary_path(const std::string& d) { return d + "/summary.csv"; }
std::string histogram_path(const std::string& d) { return d + "/histograms.csv"; }
std::string exclusions_path(const std::string& d) { return d + "/exclusions.csv"; }
std::string attributions_path(const std::string& d) { return d + "/attributions.csv"; }
std::string attributions_meta_path(const std::string& d) { return d + "/attributions_meta.json"; }
std::string neighbourhood_dump_path(const std::string& d) { return d + "/neighbourhoods.csv"; }
std::string report_path(const std::string& d) { return d + "/report.txt"; }
std::string manifest_path(const std::string& d) { return d + "/manifest.json"; }

namespace {

class StageTimer {
public:
    StageTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void require_file(const std::string& path, const std::string& hint) {
    if (!fs::exists(path))
        throw DataError("pipeline: missing '" + path + "' (" + hint + ")");
}

void update_manifest(const std::string& out_dir, const RunConfig& cfg, const std::string& stage,
                     const std::vector<std::string>& files,
                     const std::map<std::string, std::size_t>& row_counts, double seconds) {
    json manifest;
    if (fs::exists(manifest_path(out_dir))) {
        std::ifstream in(manifest_path(out_dir));
        try {
            manifest = json::parse(in);
        } catch (const json::parse_error&) {
            manifest = json::object();
        }
    }
    manifest["config"] = json::parse(cfg.to_json_text());
    manifest["versions"] = {{"model_format", "v1"}, {"index_format", "v1"}};
    json stage_entry;
    stage_entry["files"] = files;
    stage_entry["seconds"] = seconds;
    for (const auto& [key, value] : row_counts) stage_entry["row_counts"][key] = value;
    manifest["stages"][stage] = stage_entry;

    std::ofstream out(manifest_path(out_dir));
    out << manifest.dump(2) << '\n';
}

data::Dataset load_input_dataset(const RunConfig& cfg, const std::string& out_dir) {
    if (cfg.dataset.source == "csv")
        return data::load_csv(cfg.dataset.csv_path, cfg.dataset.label_column,
                              cfg.dataset.group_column);
    require_file(dataset_path(out_dir), "run synth first");
    return data::load_csv(dataset_path(out_dir), "label", "group");
}

data::SplitIndices load_splits(const std::string& out_dir, std::size_t n_rows) {
    require_file(splits_path(out_dir), "run split first");
    return data::load_split_manifest(splits_path(out_dir), n_rows);
}

std::vector<int> gather_labels(const data::Dataset& d, const std::vector<std::size_t>& rows) {
    std::vector<int> out;
    out.reserve(rows.size());
    for (std::size_t r : rows) out.push_back(d.labels[r]);
    return out;
}

}  // namespace

void cmd_synth(const RunConfig& cfg, const std::string& out_dir) {
    StageTimer timer;
    if (cfg.dataset.source != "synthetic")
        throw ConfigError("synth: dataset source is '" + cfg.dataset.source +
                          "', nothing to generate");
    fs::create_directories(out_dir);
    data::SyntheticSpec spec = cfg.dataset.synthetic;
    spec.seed = derive_seed(cfg.seed, "synth");
    const data::Dataset data = data::generate_synthetic(spec);
    data::write_csv(data, dataset_path(out_dir));
    update_manifest(out_dir, cfg, "synth", {dataset_path(out_dir)},
                    {{"rows", data.n_rows}, {"minority", data.count_label(1)}}, timer.seconds());
}

void cmd_split(const RunConfig& cfg, const std::string& out_dir) {
    StageTimer timer;
    fs::create_directories(out_dir);
    const data::Dataset data = load_input_dataset(cfg, out_dir);
    data::SplitSpec spec = cfg.split;
    spec.seed = derive_seed(cfg.seed, "split");
    const data::SplitIndices splits = data::stratified_group_split(data, spec);
    data::write_split_manifest(data, splits, splits_path(out_dir));
    update_manifest(out_dir, cfg, "split", {splits_path(out_dir)},
                    {{"train", splits.train.size()},
                     {"val", splits.val.size()},
                     {"test", splits.test.size()}},
                    timer.seconds());
}

namespace {

std::vector<int> predict_rows(const net::MlpModel& model, const data::Matrix& rows) {
    std::vector<int> preds(rows.n_rows);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows.n_rows); ++i)
        preds[static_cast<std::size_t>(i)] =
            net::predict_class(model, rows.row(static_cast<std::size_t>(i)));
    return preds;
}

}  // namespace

void cmd_train(const RunConfig& cfg, const std::string& out_dir) {
    StageTimer timer;
    fs::create_directories(out_dir);
    const data::Dataset raw = load_input_dataset(cfg, out_dir);
    const data::SplitIndices splits = load_splits(out_dir, raw.n_rows);

    const data::StandardizationStats stats = data::fit_standardize(raw, splits.train);
    const data::Dataset std_data = data::apply_standardize(raw, stats);

    const net::MlpModel init =
        net::make_mlp(raw.n_features, cfg.model.hidden, derive_seed(cfg.seed, "model-init"));
    net::TrainConfig train_cfg = cfg.train;
    train_cfg.seed = derive_seed(cfg.seed, "train");

    const data::Matrix train_rows = data::gather_rows(std_data, splits.train);
    const std::vector<int> train_labels = gather_labels(std_data, splits.train);
    const net::TrainResult result = net::train(init, train_rows, train_labels, cfg.focal, train_cfg);

    net::save_model({result.model, stats}, model_path(out_dir));

    {
        std::ofstream out(loss_history_path(out_dir));
        out << "epoch,mean_loss\n";
        for (std::size_t e = 0; e < result.epoch_loss.size(); ++e)
            out << e << ',' << data::format_double(result.epoch_loss[e]) << '\n';
    }

    {
        std::ofstream out(f1_report_path(out_dir));
        out << "split,class,f1,support\n";
        const std::pair<const char*, const std::vector<std::size_t>*> parts[] = {
            {"train", &splits.train}, {"val", &splits.val}, {"test", &splits.test}};
        for (const auto& [name, rows] : parts) {
            const data::Matrix features = data::gather_rows(std_data, *rows);
            const std::vector<int> labels = gather_labels(std_data, *rows);
            const std::vector<int> preds = predict_rows(result.model, features);
            for (int cls : {0, 1}) {
                const double f1 = net::f1_score(preds, labels, cls);
                const auto support = static_cast<std::size_t>(
                    std::count(labels.begin(), labels.end(), cls));
                out << name << ',' << cls << ',' << data::format_double(f1) << ',' << support
                    << '\n';
            }
        }
    }

    update_manifest(out_dir, cfg, "train",
                    {model_path(out_dir), loss_history_path(out_dir), f1_report_path(out_dir)},
                    {{"train_rows", splits.train.size()}, {"epochs", cfg.train.epochs}},
                    timer.seconds());
}

void cmd_build_index(const RunConfig& cfg, const std::string& out_dir) {
    StageTimer timer;
    const data::Dataset raw = load_input_dataset(cfg, out_dir);
    const data::SplitIndices splits = load_splits(out_dir, raw.n_rows);
    require_file(model_path(out_dir), "run train first");
    const net::SavedModel saved = net::load_model(model_path(out_dir));

    const data::Dataset std_data = data::apply_standardize(raw, saved.stats);
    const data::Matrix val_rows = data::gather_rows(std_data, splits.val);
    const nbhd::MedoidIndex index =
        nbhd::build_medoid_index(val_rows, cfg.k_nn, derive_seed(cfg.seed, "medoid-index"));
    nbhd::save_medoid_index(index, index_path(out_dir));

    update_manifest(out_dir, cfg, "build-index", {index_path(out_dir)},
                    {{"validation_rows", val_rows.n_rows}, {"medoids", index.medoid_rows.size()}},
                    timer.seconds());
}

TuneResult cmd_tune_lambda(const RunConfig& cfg, const std::string& out_dir,
                           std::vector<double> grid) {
    StageTimer timer;
    if (grid.empty()) grid = {0.01, 0.02, 0.05, 0.1, 0.2};
    std::sort(grid.begin(), grid.end());

    const data::Dataset raw = load_input_dataset(cfg, out_dir);
    const data::SplitIndices splits = load_splits(out_dir, raw.n_rows);
    require_file(model_path(out_dir), "run train first");
    require_file(index_path(out_dir), "run build-index first");
    const net::SavedModel saved = net::load_model(model_path(out_dir));
    const nbhd::MedoidIndex index = nbhd::load_medoid_index(index_path(out_dir));

    const data::Dataset std_data = data::apply_standardize(raw, saved.stats);
    std::vector<std::size_t> points;
    for (std::size_t r : splits.val)
        if (std_data.labels[r] == 1) points.push_back(r);
    if (points.empty()) throw DataError("tune-lambda: no minority points in the validation split");

    TuneResult result;
    for (double lambda : grid) {
        TuneRow row;
        row.lambda = lambda;
        const std::string tag = "tune-" + data::format_double(lambda);
        std::vector<nbhd::AcceptanceCount> counts(points.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i) {
            const std::size_t r = points[static_cast<std::size_t>(i)];
            counts[static_cast<std::size_t>(i)] = nbhd::measure_acceptance(
                saved.model, std_data.row(r), index, lambda, cfg.perturb.n_target,
                derive_seed(cfg.seed, tag, r), cfg.perturb.per_point_lambda);
        }
        for (const auto& c : counts) {
            row.generated += c.generated;
            row.preserved += c.preserved;
        }
        row.rate = row.generated == 0
                       ? 0.0
                       : static_cast<double>(row.preserved) / static_cast<double>(row.generated);
        result.rows.push_back(row);
    }

    double best_rate = -1.0;
    for (const TuneRow& row : result.rows) {
        if (row.rate >= result.threshold) {
            result.chosen_lambda = row.lambda;  // grid is ascending: keeps the largest passing
            result.any_passed = true;
        }
        if (!result.any_passed && row.rate > best_rate) {
            best_rate = row.rate;
            result.chosen_lambda = row.lambda;
        }
    }

    std::ofstream out(lambda_table_path(out_dir));
    out << "lambda,generated,preserved,rate\n";
    for (const TuneRow& row : result.rows)
        out << data::format_double(row.lambda) << ',' << row.generated << ',' << row.preserved
            << ',' << data::format_double(row.rate) << '\n';

    update_manifest(out_dir, cfg, "tune-lambda", {lambda_table_path(out_dir)},
                    {{"validation_minority_points", points.size()}}, timer.seconds());
    return result;
}

namespace {

struct PointOutcome {
    bool excluded = false;
    nbhd::NeighbourhoodStats stats;
    std::string reason;
    std::vector<metrics::ReliabilityScore> scores;
    std::vector<std::pair<std::size_t, nbhd::Neighbourhood>> kept_neighbourhood;
};

struct SummaryRow {
    double robustness_mean = 0.0, robustness_std = 0.0;
    double consistency_mean = 0.0, consistency_std = 0.0;
    std::size_t n = 0;
};

SummaryRow summarize(const std::vector<double>& rob, const std::vector<double>& cons) {
    SummaryRow s;
    s.n = rob.size();
    if (s.n == 0) return s;
    const double n = static_cast<double>(s.n);
    for (double v : rob) s.robustness_mean += v;
    for (double v : cons) s.consistency_mean += v;
    s.robustness_mean /= n;
    s.consistency_mean /= n;
    for (double v : rob) s.robustness_std += (v - s.robustness_mean) * (v - s.robustness_mean);
    for (double v : cons) s.consistency_std += (v - s.consistency_mean) * (v - s.consistency_mean);
    s.robustness_std = std::sqrt(s.robustness_std / n);
    s.consistency_std = std::sqrt(s.consistency_std / n);
    return s;
}

}  // namespace

void cmd_evaluate(const RunConfig& cfg, const std::string& out_dir) {
    StageTimer timer;
    const data::Dataset raw = load_input_dataset(cfg, out_dir);
    const data::SplitIndices splits = load_splits(out_dir, raw.n_rows);
    require_file(model_path(out_dir), "run train first");
    const net::SavedModel saved = net::load_model(model_path(out_dir));

    std::vector<nbhd::Generator> generators;
    if (cfg.evaluate.generator == "medoid" || cfg.evaluate.generator == "both")
        generators.push_back(nbhd::Generator::medoid);
    if (cfg.evaluate.generator == "gaussian" || cfg.evaluate.generator == "both")
        generators.push_back(nbhd::Generator::gaussian);

    nbhd::MedoidIndex index;
    const bool needs_index = std::find(generators.begin(), generators.end(),
                                       nbhd::Generator::medoid) != generators.end();
    if (needs_index) {
        require_file(index_path(out_dir), "run build-index first");
        index = nbhd::load_medoid_index(index_path(out_dir));
    }

    const data::Dataset std_data = data::apply_standardize(raw, saved.stats);
    std::vector<std::size_t> points;
    for (std::size_t r : splits.test)
        if (cfg.evaluate.classes == "both" || std_data.labels[r] == 1) points.push_back(r);
    if (points.empty())
        throw DataError("evaluate: no points to evaluate (class filter '" + cfg.evaluate.classes +
                        "' matched nothing in the test split)");

    attr::ExplainConfig explain_cfg;
    explain_cfg.ig_steps = cfg.evaluate.ig_steps;
    explain_cfg.lrp_epsilon = cfg.evaluate.lrp_epsilon;

    std::map<nbhd::Generator, std::vector<PointOutcome>> outcomes;
    for (nbhd::Generator gen : generators) {
        auto& slots = outcomes[gen];
        slots.resize(points.size());
        const std::string stage_tag = gen == nbhd::Generator::medoid ? "evaluate-medoid"
                                                                     : "evaluate-gaussian";
        std::string first_error;

#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t ip = 0; ip < static_cast<std::ptrdiff_t>(points.size()); ++ip) {
            const auto i = static_cast<std::size_t>(ip);
            const std::size_t r = points[i];
            PointOutcome& slot = slots[i];
            try {
                nbhd::Neighbourhood nb;
                if (gen == nbhd::Generator::medoid) {
                    nbhd::PerturbConfig pc = cfg.perturb;
                    pc.seed = derive_seed(cfg.seed, stage_tag, r);
                    nb = nbhd::generate_neighbourhood(saved.model, std_data.row(r), index, pc);
                } else {
                    nbhd::GaussianConfig gc = cfg.gaussian;
                    gc.seed = derive_seed(cfg.seed, stage_tag, r);
                    nb = nbhd::generate_gaussian_neighbourhood(saved.model, std_data.row(r), gc);
                }
                slot.scores = metrics::score_point_methods(saved.model, std_data.row(r),
                                                           cfg.evaluate.methods, nb, explain_cfg,
                                                           cfg.evaluate.ensemble_weighting, r);
                if (cfg.evaluate.dump_neighbourhoods)
                    slot.kept_neighbourhood.emplace_back(r, std::move(nb));
            } catch (const nbhd::UnstablePointError& e) {
                slot.excluded = true;
                slot.stats = e.stats;
                slot.reason = "no_members";
            } catch (const std::exception& e) {
#pragma omp critical
                if (first_error.empty()) first_error = e.what();
            }
        }
        if (!first_error.empty()) throw Error("evaluate: " + first_error);
    }

    std::vector<std::string> files;

    {
        std::ofstream out(scores_path(out_dir));
        out << "point_id,method,generator,robustness,consistency,n_members,flags\n";
        for (nbhd::Generator gen : generators)
            for (const PointOutcome& slot : outcomes[gen])
                for (const auto& s : slot.scores)
                    out << s.point_id << ',' << attr::method_name(s.method) << ','
                        << nbhd::generator_name(gen) << ',' << data::format_double(s.robustness)
                        << ',' << data::format_double(s.consistency) << ',' << s.n_members << ','
                        << s.flags() << '\n';
        files.push_back(scores_path(out_dir));
    }

    {
        std::ofstream out(summary_path(out_dir));
        out << "generator,method,robustness_mean,robustness_std,consistency_mean,consistency_std,"
               "n_points\n";
        for (nbhd::Generator gen : generators) {
            for (attr::Method method : cfg.evaluate.methods) {
                std::vector<double> rob, cons;
                for (const PointOutcome& slot : outcomes[gen])
                    for (const auto& s : slot.scores)
                        if (s.method == method) {
                            rob.push_back(s.robustness);
                            cons.push_back(s.consistency);
                        }
                const SummaryRow s = summarize(rob, cons);
                out << nbhd::generator_name(gen) << ',' << attr::method_name(method) << ','
                    << data::format_double(s.robustness_mean) << ','
                    << data::format_double(s.robustness_std) << ','
                    << data::format_double(s.consistency_mean) << ','
                    << data::format_double(s.consistency_std) << ',' << s.n << '\n';
            }
        }
        files.push_back(summary_path(out_dir));
    }

    {
        // 40 fixed bins over [-1,1] per (generator, method, score, class).
        constexpr int kBins = 40;
        std::ofstream out(histogram_path(out_dir));
        out << "generator,method,score,class,bin_lo,bin_hi,count\n";
        for (nbhd::Generator gen : generators) {
            for (attr::Method method : cfg.evaluate.methods) {
                for (const char* which : {"robustness", "consistency"}) {
                    for (int cls : {0, 1}) {
                        std::vector<std::size_t> bins(kBins, 0);
                        bool any = false;
                        for (const PointOutcome& slot : outcomes[gen])
                            for (const auto& s : slot.scores) {
                                if (s.method != method) continue;
                                if (std_data.labels[s.point_id] != cls) continue;
                                const double v = which == std::string("robustness")
                                                     ? s.robustness
                                                     : s.consistency;
                                int b = static_cast<int>((v + 1.0) / 2.0 * kBins);
                                b = std::clamp(b, 0, kBins - 1);
                                ++bins[static_cast<std::size_t>(b)];
                                any = true;
                            }
                        if (!any) continue;
                        for (int b = 0; b < kBins; ++b) {
                            const double lo = -1.0 + 2.0 * b / kBins;
                            const double hi = -1.0 + 2.0 * (b + 1) / kBins;
                            out << nbhd::generator_name(gen) << ',' << attr::method_name(method)
                                << ',' << which << ',' << cls << ',' << data::format_double(lo)
                                << ',' << data::format_double(hi) << ','
                                << bins[static_cast<std::size_t>(b)] << '\n';
                        }
                    }
                }
            }
        }
        files.push_back(histogram_path(out_dir));
    }

    std::size_t excluded_total = 0;
    {
        std::ofstream out(exclusions_path(out_dir));
        out << "point_id,generator,reason,attempts,class_rejections,zero_distance_drops,"
               "locality_rejections\n";
        for (nbhd::Generator gen : generators)
            for (std::size_t i = 0; i < points.size(); ++i) {
                const PointOutcome& slot = outcomes[gen][i];
                if (!slot.excluded) continue;
                ++excluded_total;
                out << points[i] << ',' << nbhd::generator_name(gen) << ',' << slot.reason << ','
                    << slot.stats.attempts << ',' << slot.stats.class_rejections << ','
                    << slot.stats.zero_distance_drops << ',' << slot.stats.locality_rejections
                    << '\n';
            }
        files.push_back(exclusions_path(out_dir));
    }

    {
        // Anchor attributions for every evaluated point (generator-independent).
        std::ofstream out(attributions_path(out_dir));
        out << "point_id,method,feature_name,value\n";
        for (std::size_t r : points) {
            for (attr::Method method : cfg.evaluate.methods) {
                const attr::Attribution a = attr::explain(saved.model, std_data.row(r), method,
                                                          explain_cfg);
                for (std::size_t j = 0; j < a.values.size(); ++j)
                    out << r << ',' << attr::method_name(method) << ',' << raw.feature_names[j]
                        << ',' << data::format_double(a.values[j]) << '\n';
            }
        }
        files.push_back(attributions_path(out_dir));

        json meta;
        meta["baseline"] = "zero vector in standardized space (training feature means)";
        meta["ig_steps"] = cfg.evaluate.ig_steps;
        meta["lrp_epsilon"] = cfg.evaluate.lrp_epsilon;
        meta["deeplift_threshold"] = explain_cfg.deeplift_threshold;
        json members = json::array();
        for (attr::Method m : explain_cfg.ensemble_members) members.push_back(attr::method_name(m));
        meta["ensemble_members"] = members;
        meta["ensemble_weighting"] =
            cfg.evaluate.ensemble_weighting == metrics::EnsembleWeighting::uniform ? "uniform"
                                                                                   : "robustness";
        std::ofstream meta_out(attributions_meta_path(out_dir));
        meta_out << meta.dump(2) << '\n';
        files.push_back(attributions_meta_path(out_dir));
    }

    if (cfg.evaluate.dump_neighbourhoods) {
        std::vector<std::pair<std::size_t, nbhd::Neighbourhood>> items;
        for (nbhd::Generator gen : generators)
            for (PointOutcome& slot : outcomes[gen])
                for (auto& item : slot.kept_neighbourhood) items.push_back(std::move(item));
        nbhd::dump_neighbourhoods(items, raw.feature_names, neighbourhood_dump_path(out_dir));
        files.push_back(neighbourhood_dump_path(out_dir));
    }

    update_manifest(out_dir, cfg, "evaluate", files,
                    {{"filtered_test_points", points.size()},
                     {"generators", generators.size()},
                     {"excluded", excluded_total}},
                    timer.seconds());
}

namespace {

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("report: missing '" + path + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::string pct(double v, double sd) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f (± %.2f) %%", v * 100.0, sd * 100.0);
    return buf;
}

std::string method_display_name(const std::string& tag) {
    if (tag == "ig") return "Integrated Gradients";
    if (tag == "deeplift") return "DeepLIFT";
    if (tag == "lrp") return "LRP";
    if (tag == "ensemble") return "Ensemble";
    return tag;
}

}  // namespace

std::string cmd_report(const std::string& out_dir) {
    require_file(f1_report_path(out_dir), "run train first");
    require_file(summary_path(out_dir), "run evaluate first");

    std::ostringstream text;
    text << "relia run report\n================\n\n";

    {
        const auto rows = read_csv_rows(f1_report_path(out_dir));
        text << "Model performance (F1 / support)\n";
        char buf[128];
        std::snprintf(buf, sizeof(buf), "  %-8s %-20s %-20s\n", "split", "class 0", "class 1");
        text << buf;
        std::map<std::string, std::map<int, std::pair<double, std::string>>> by_split;
        std::vector<std::string> split_order;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (r.size() < 4) continue;
            if (by_split.find(r[0]) == by_split.end()) split_order.push_back(r[0]);
            by_split[r[0]][std::stoi(r[1])] = {std::stod(r[2]), r[3]};
        }
        for (const auto& split : split_order) {
            const auto& classes = by_split[split];
            std::string c0 = "-", c1 = "-";
            char cell[64];
            if (classes.count(0)) {
                std::snprintf(cell, sizeof(cell), "%.3f (n=%s)", classes.at(0).first,
                              classes.at(0).second.c_str());
                c0 = cell;
            }
            if (classes.count(1)) {
                std::snprintf(cell, sizeof(cell), "%.3f (n=%s)", classes.at(1).first,
                              classes.at(1).second.c_str());
                c1 = cell;
            }
            std::snprintf(buf, sizeof(buf), "  %-8s %-20s %-20s\n", split.c_str(), c0.c_str(),
                          c1.c_str());
            text << buf;
        }
        text << '\n';
    }

    struct SummaryCell {
        double rm = 0, rs = 0, cm = 0, cs = 0;
        std::size_t n = 0;
    };
    std::map<std::string, std::map<std::string, SummaryCell>> by_gen;
    std::vector<std::string> gen_order, method_order;
    {
        const auto rows = read_csv_rows(summary_path(out_dir));
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (r.size() < 7) continue;
            if (by_gen.find(r[0]) == by_gen.end()) gen_order.push_back(r[0]);
            if (std::find(method_order.begin(), method_order.end(), r[1]) == method_order.end())
                method_order.push_back(r[1]);
            by_gen[r[0]][r[1]] = {std::stod(r[2]), std::stod(r[3]), std::stod(r[4]),
                                  std::stod(r[5]), std::stoull(r[6])};
        }
    }

    for (const auto& gen : gen_order) {
        text << "Reliability scores — " << gen << " generator\n";
        char buf[160];
        std::snprintf(buf, sizeof(buf), "  %-22s %-20s %-20s %s\n", "method", "robustness",
                      "consistency", "points");
        text << buf;
        for (const auto& method : method_order) {
            if (!by_gen[gen].count(method)) continue;
            const SummaryCell& c = by_gen[gen][method];
            std::snprintf(buf, sizeof(buf), "  %-22s %-20s %-20s %zu\n",
                          method_display_name(method).c_str(), pct(c.rm, c.rs).c_str(),
                          pct(c.cm, c.cs).c_str(), c.n);
            text << buf;
        }
        text << '\n';
    }

    if (by_gen.count("medoid") && by_gen.count("gaussian")) {
        text << "Generator comparison (mean robustness, medoid - gaussian)\n";
        char buf[160];
        std::snprintf(buf, sizeof(buf), "  %-22s %-10s %-10s %s\n", "method", "medoid", "gaussian",
                      "delta");
        text << buf;
        for (const auto& method : method_order) {
            if (!by_gen["medoid"].count(method) || !by_gen["gaussian"].count(method)) continue;
            const double a = by_gen["medoid"][method].rm;
            const double b = by_gen["gaussian"][method].rm;
            std::snprintf(buf, sizeof(buf), "  %-22s %-10.4f %-10.4f %+.4f\n",
                          method_display_name(method).c_str(), a, b, a - b);
            text << buf;
        }
        text << '\n';
    }

    if (fs::exists(lambda_table_path(out_dir))) {
        const auto rows = read_csv_rows(lambda_table_path(out_dir));
        text << "Lambda tuning (class-preservation acceptance)\n";
        char buf[128];
        std::snprintf(buf, sizeof(buf), "  %-10s %-12s %-12s %s\n", "lambda", "generated",
                      "preserved", "rate");
        text << buf;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].size() < 4) continue;
            std::snprintf(buf, sizeof(buf), "  %-10s %-12s %-12s %.4f\n", rows[i][0].c_str(),
                          rows[i][1].c_str(), rows[i][2].c_str(), std::stod(rows[i][3]));
            text << buf;
        }
        text << '\n';
    }

    std::ofstream out(report_path(out_dir));
    out << text.str();
    return text.str();
}

}  // namespace relia::cli
