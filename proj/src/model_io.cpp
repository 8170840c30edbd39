#include "relia/model_io.hpp"

#include <fstream>
#include <sstream>

#include "relia/csv.hpp"
#include "relia/errors.hpp"

namespace relia::net {

namespace {

constexpr const char* kMagic = "relia-model";
constexpr const char* kVersion = "v1";

void write_values(std::ofstream& out, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        out << (i ? " " : "") << data::format_double(values[i]);
    out << '\n';
}

std::vector<double> read_values(std::istream& in, std::size_t count, const char* what) {
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i)
        if (!(in >> values[i]))
            throw DataError(std::string("model file: truncated or malformed ") + what);
    return values;
}

void expect_token(std::istream& in, const std::string& want) {
    std::string tok;
    if (!(in >> tok) || tok != want)
        throw DataError("model file: expected '" + want + "', found '" + tok + "'");
}

}  // namespace

void save_model(const SavedModel& saved, const std::string& path) {
    saved.model.validate();
    std::ofstream out(path);
    if (!out) throw DataError("model file: cannot write '" + path + "'");
    out << kMagic << ' ' << kVersion << '\n';
    out << "layers " << saved.model.layers.size() << '\n';
    for (std::size_t k = 0; k < saved.model.layers.size(); ++k) {
        const auto& l = saved.model.layers[k];
        out << "layer " << k << ' ' << l.in << ' ' << l.out << ' ' << activation_name(l.act) << '\n';
        out << "weights\n";
        write_values(out, l.weights);
        out << "biases\n";
        write_values(out, l.biases);
    }
    out << "stats " << saved.stats.dim() << '\n';
    out << "means\n";
    write_values(out, saved.stats.means);
    out << "stds\n";
    write_values(out, saved.stats.std_devs);
    out << "end\n";
    if (!out) throw DataError("model file: write failed for '" + path + "'");
}

SavedModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("model file: cannot open '" + path + "'");

    std::string magic, version;
    if (!(in >> magic >> version) || magic != kMagic)
        throw DataError("model file: '" + path + "' is not a model file");
    if (version != kVersion)
        throw DataError("model file: version mismatch, expected '" + std::string(kVersion) +
                        "', found '" + version + "'");

    SavedModel saved;
    expect_token(in, "layers");
    std::size_t n_layers = 0;
    if (!(in >> n_layers) || n_layers == 0) throw DataError("model file: bad layer count");
    for (std::size_t k = 0; k < n_layers; ++k) {
        expect_token(in, "layer");
        std::size_t idx = 0;
        Layer l;
        std::string act;
        if (!(in >> idx >> l.in >> l.out >> act) || idx != k)
            throw DataError("model file: malformed layer header " + std::to_string(k));
        l.act = activation_from_name(act);
        expect_token(in, "weights");
        l.weights = read_values(in, l.in * l.out, "weights");
        expect_token(in, "biases");
        l.biases = read_values(in, l.out, "biases");
        saved.model.layers.push_back(std::move(l));
    }
    expect_token(in, "stats");
    std::size_t dim = 0;
    if (!(in >> dim)) throw DataError("model file: bad stats dimension");
    expect_token(in, "means");
    saved.stats.means = read_values(in, dim, "means");
    expect_token(in, "stds");
    saved.stats.std_devs = read_values(in, dim, "stds");
    expect_token(in, "end");

    saved.model.validate();
    return saved;
}

}  // namespace relia::net
