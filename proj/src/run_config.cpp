#include "relia/run_config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "relia/errors.hpp"

namespace relia::cli {

using nlohmann::json;

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* ctx) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ConfigError(std::string("config: unknown key '") + key + "' in " + ctx);
    }
}

template <typename T>
void get_if(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void parse_dataset(const json& j, DatasetConfig& cfg) {
    check_keys(j, {"source", "csv_path", "label_column", "group_column", "synthetic"}, "dataset");
    get_if(j, "source", cfg.source);
    if (cfg.source != "synthetic" && cfg.source != "csv")
        throw ConfigError("config: dataset.source must be 'synthetic' or 'csv'");
    get_if(j, "csv_path", cfg.csv_path);
    get_if(j, "label_column", cfg.label_column);
    get_if(j, "group_column", cfg.group_column);
    if (j.contains("synthetic")) {
        const json& s = j.at("synthetic");
        check_keys(s, {"n_points", "m_features", "minority_freq", "n_groups", "separation"},
                   "dataset.synthetic");
        get_if(s, "n_points", cfg.synthetic.n_points);
        get_if(s, "m_features", cfg.synthetic.m_features);
        get_if(s, "minority_freq", cfg.synthetic.minority_freq);
        get_if(s, "n_groups", cfg.synthetic.n_groups);
        get_if(s, "separation", cfg.synthetic.separation);
    }
}

void parse_split(const json& j, data::SplitSpec& spec) {
    check_keys(j, {"train_frac", "val_frac", "test_frac"}, "split");
    get_if(j, "train_frac", spec.train_frac);
    get_if(j, "val_frac", spec.val_frac);
    get_if(j, "test_frac", spec.test_frac);
}

void parse_train(const json& j, net::TrainConfig& cfg) {
    check_keys(j, {"epochs", "batch_size", "learning_rate", "beta1", "beta2", "epsilon"}, "train");
    get_if(j, "epochs", cfg.epochs);
    get_if(j, "batch_size", cfg.batch_size);
    get_if(j, "learning_rate", cfg.optimizer.learning_rate);
    get_if(j, "beta1", cfg.optimizer.beta1);
    get_if(j, "beta2", cfg.optimizer.beta2);
    get_if(j, "epsilon", cfg.optimizer.epsilon);
}

void parse_perturb(const json& j, nbhd::PerturbConfig& cfg, std::size_t& k_nn) {
    check_keys(j, {"lambda", "n_target", "max_attempts", "locality_epsilon", "per_point_lambda", "k_nn"},
               "perturb");
    get_if(j, "lambda", cfg.lambda);
    get_if(j, "n_target", cfg.n_target);
    get_if(j, "max_attempts", cfg.max_attempts);
    get_if(j, "per_point_lambda", cfg.per_point_lambda);
    get_if(j, "k_nn", k_nn);
    if (j.contains("locality_epsilon") && !j.at("locality_epsilon").is_null())
        cfg.locality_epsilon = j.at("locality_epsilon").get<double>();
}

void parse_evaluate(const json& j, EvaluateConfig& cfg) {
    check_keys(j,
               {"methods", "generator", "classes", "ig_steps", "lrp_epsilon", "ensemble_weighting",
                "dump_neighbourhoods"},
               "evaluate");
    if (j.contains("methods")) {
        cfg.methods.clear();
        for (const auto& name : j.at("methods"))
            cfg.methods.push_back(attr::method_from_name(name.get<std::string>()));
    }
    get_if(j, "generator", cfg.generator);
    get_if(j, "classes", cfg.classes);
    get_if(j, "ig_steps", cfg.ig_steps);
    get_if(j, "lrp_epsilon", cfg.lrp_epsilon);
    if (j.contains("ensemble_weighting")) {
        const auto w = j.at("ensemble_weighting").get<std::string>();
        if (w == "uniform")
            cfg.ensemble_weighting = metrics::EnsembleWeighting::uniform;
        else if (w == "robustness")
            cfg.ensemble_weighting = metrics::EnsembleWeighting::robustness;
        else
            throw ConfigError("config: ensemble_weighting must be 'uniform' or 'robustness'");
    }
    get_if(j, "dump_neighbourhoods", cfg.dump_neighbourhoods);
}

}  // namespace

void RunConfig::validate() const {
    if (evaluate.methods.empty()) throw ConfigError("config: evaluate.methods must not be empty");
    if (evaluate.generator != "medoid" && evaluate.generator != "gaussian" &&
        evaluate.generator != "both")
        throw ConfigError("config: evaluate.generator must be medoid, gaussian or both");
    if (evaluate.classes != "minority" && evaluate.classes != "both")
        throw ConfigError("config: evaluate.classes must be minority or both");
    if (dataset.source == "csv" && dataset.csv_path.empty())
        throw ConfigError("config: dataset.source is csv but csv_path is empty");
    if (k_nn == 0) throw ConfigError("config: perturb.k_nn must be >= 1");
    if (!(perturb.lambda > 0.0) || !(perturb.lambda < 1.0))
        throw ConfigError("config: perturb.lambda must lie in (0,1)");
    if (perturb.n_target == 0) throw ConfigError("config: perturb.n_target must be >= 1");
    if (!(gaussian.sigma > 0.0)) throw ConfigError("config: gaussian.sigma must be positive");
}

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    check_keys(j, {"seed", "dataset", "split", "model", "train", "focal", "perturb", "gaussian",
                   "evaluate"},
               "config");

    RunConfig cfg;
    get_if(j, "seed", cfg.seed);
    if (j.contains("dataset")) parse_dataset(j.at("dataset"), cfg.dataset);
    if (j.contains("split")) parse_split(j.at("split"), cfg.split);
    if (j.contains("model")) {
        check_keys(j.at("model"), {"hidden"}, "model");
        get_if(j.at("model"), "hidden", cfg.model.hidden);
    }
    if (j.contains("train")) parse_train(j.at("train"), cfg.train);
    if (j.contains("focal")) {
        check_keys(j.at("focal"), {"gamma", "alpha"}, "focal");
        get_if(j.at("focal"), "gamma", cfg.focal.gamma);
        get_if(j.at("focal"), "alpha", cfg.focal.alpha);
    }
    if (j.contains("perturb")) parse_perturb(j.at("perturb"), cfg.perturb, cfg.k_nn);
    if (j.contains("gaussian")) {
        const json& g = j.at("gaussian");
        check_keys(g, {"sigma", "n_target", "max_attempts"}, "gaussian");
        get_if(g, "sigma", cfg.gaussian.sigma);
        get_if(g, "n_target", cfg.gaussian.n_target);
        get_if(g, "max_attempts", cfg.gaussian.max_attempts);
    }
    if (j.contains("evaluate")) parse_evaluate(j.at("evaluate"), cfg.evaluate);
    cfg.validate();
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string RunConfig::to_json_text() const {
    json j;
    j["seed"] = seed;
    j["dataset"] = {{"source", dataset.source},
                    {"csv_path", dataset.csv_path},
                    {"label_column", dataset.label_column},
                    {"group_column", dataset.group_column},
                    {"synthetic",
                     {{"n_points", dataset.synthetic.n_points},
                      {"m_features", dataset.synthetic.m_features},
                      {"minority_freq", dataset.synthetic.minority_freq},
                      {"n_groups", dataset.synthetic.n_groups},
                      {"separation", dataset.synthetic.separation}}}};
    j["split"] = {{"train_frac", split.train_frac},
                  {"val_frac", split.val_frac},
                  {"test_frac", split.test_frac}};
    j["model"] = {{"hidden", model.hidden}};
    j["train"] = {{"epochs", train.epochs},
                  {"batch_size", train.batch_size},
                  {"learning_rate", train.optimizer.learning_rate},
                  {"beta1", train.optimizer.beta1},
                  {"beta2", train.optimizer.beta2},
                  {"epsilon", train.optimizer.epsilon}};
    j["focal"] = {{"gamma", focal.gamma}, {"alpha", focal.alpha}};
    j["perturb"] = {{"lambda", perturb.lambda},
                    {"n_target", perturb.n_target},
                    {"max_attempts", perturb.max_attempts},
                    {"per_point_lambda", perturb.per_point_lambda},
                    {"k_nn", k_nn}};
    if (perturb.locality_epsilon)
        j["perturb"]["locality_epsilon"] = *perturb.locality_epsilon;
    j["gaussian"] = {{"sigma", gaussian.sigma},
                     {"n_target", gaussian.n_target},
                     {"max_attempts", gaussian.max_attempts}};
    json methods = json::array();
    for (attr::Method m : evaluate.methods) methods.push_back(attr::method_name(m));
    j["evaluate"] = {
        {"methods", methods},
        {"generator", evaluate.generator},
        {"classes", evaluate.classes},
        {"ig_steps", evaluate.ig_steps},
        {"lrp_epsilon", evaluate.lrp_epsilon},
        {"ensemble_weighting",
         evaluate.ensemble_weighting == metrics::EnsembleWeighting::uniform ? "uniform"
                                                                            : "robustness"},
        {"dump_neighbourhoods", evaluate.dump_neighbourhoods}};
    return j.dump(2);
}

}  // namespace relia::cli
