#include "relia/split.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "relia/errors.hpp"
#include "relia/rng.hpp"

namespace relia::data {

namespace {

struct GroupInfo {
    std::string key;
    std::vector<std::size_t> rows;
    std::size_t minority = 0;
};

void validate_spec(const SplitSpec& spec) {
    if (!(spec.train_frac > 0.0) || !(spec.val_frac > 0.0) || !(spec.test_frac > 0.0))
        throw ConfigError("split: all fractions must be positive");
    if (std::abs(spec.train_frac + spec.val_frac + spec.test_frac - 1.0) > 1e-9)
        throw ConfigError("split: fractions must sum to 1");
}

}  // namespace

SplitIndices stratified_group_split(const Dataset& data, const SplitSpec& spec) {
    validate_spec(spec);

    std::map<std::string, GroupInfo> by_key;
    for (std::size_t i = 0; i < data.n_rows; ++i) {
        auto& g = by_key[data.group_keys[i]];
        g.key = data.group_keys[i];
        g.rows.push_back(i);
        if (data.labels[i] == 1) ++g.minority;
    }
    if (by_key.size() < 3)
        throw DataError("split: need at least 3 distinct groups, got " +
                        std::to_string(by_key.size()));
    const std::size_t total_minority = data.count_label(1);
    if (total_minority == 0 || total_minority == data.n_rows)
        throw DataError("split: both classes must be present");

    std::vector<GroupInfo> groups;
    groups.reserve(by_key.size());
    for (auto& [key, g] : by_key) groups.push_back(std::move(g));

    // Seed permutes ties; the stable sorts keep that order within equal keys.
    Rng rng(derive_seed(spec.seed, "group-split"));
    std::shuffle(groups.begin(), groups.end(), rng);

    const double fracs[3] = {spec.train_frac, spec.val_frac, spec.test_frac};
    double size_target[3], minority_target[3];
    for (int s = 0; s < 3; ++s) {
        size_target[s] = fracs[s] * static_cast<double>(data.n_rows);
        minority_target[s] = fracs[s] * static_cast<double>(total_minority);
    }

    double size_used[3] = {0, 0, 0}, minority_used[3] = {0, 0, 0};
    SplitIndices out;
    std::vector<std::size_t>* buckets[3] = {&out.train, &out.val, &out.test};

    auto assign = [&](const GroupInfo& g, bool weigh_minority) {
        int best = 0;
        double best_score = -1e300;
        for (int s = 0; s < 3; ++s) {
            double score = (size_target[s] - size_used[s]) / size_target[s];
            if (weigh_minority)
                score += 2.0 * (minority_target[s] - minority_used[s]) /
                         std::max(minority_target[s], 1.0);
            if (score > best_score) {
                best_score = score;
                best = s;
            }
        }
        buckets[best]->insert(buckets[best]->end(), g.rows.begin(), g.rows.end());
        size_used[best] += static_cast<double>(g.rows.size());
        minority_used[best] += static_cast<double>(g.minority);
    };

    // Minority-carrying groups first (largest minority count first) so the
    // scarce class is spread proportionally; minority-free groups then fill
    // the remaining size capacity.
    std::vector<const GroupInfo*> with_minority, without_minority;
    for (const auto& g : groups)
        (g.minority > 0 ? with_minority : without_minority).push_back(&g);
    std::stable_sort(with_minority.begin(), with_minority.end(),
                     [](const GroupInfo* a, const GroupInfo* b) {
                         if (a->minority != b->minority) return a->minority > b->minority;
                         return a->rows.size() > b->rows.size();
                     });
    std::stable_sort(without_minority.begin(), without_minority.end(),
                     [](const GroupInfo* a, const GroupInfo* b) {
                         return a->rows.size() > b->rows.size();
                     });
    for (const GroupInfo* g : with_minority) assign(*g, true);
    for (const GroupInfo* g : without_minority) assign(*g, false);

    for (auto* b : buckets) std::sort(b->begin(), b->end());
    return out;
}

void write_split_manifest(const Dataset& data, const SplitIndices& splits, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("split: cannot write manifest '" + path + "'");
    out << "row_index,group_key,split\n";
    std::vector<const char*> tag(data.n_rows, nullptr);
    for (std::size_t r : splits.train) tag[r] = "train";
    for (std::size_t r : splits.val) tag[r] = "val";
    for (std::size_t r : splits.test) tag[r] = "test";
    for (std::size_t i = 0; i < data.n_rows; ++i) {
        if (!tag[i]) throw DataError("split: row " + std::to_string(i) + " not assigned to any split");
        out << i << ',' << data.group_keys[i] << ',' << tag[i] << '\n';
    }
}

SplitIndices load_split_manifest(const std::string& path, std::size_t n_rows) {
    std::ifstream in(path);
    if (!in) throw DataError("split: cannot open manifest '" + path + "'");
    std::string line;
    std::getline(in, line);  // header
    SplitIndices out;
    std::size_t seen = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string idx_s, key, split;
        std::getline(ss, idx_s, ',');
        std::getline(ss, key, ',');
        std::getline(ss, split, ',');
        if (!split.empty() && split.back() == '\r') split.pop_back();
        const std::size_t idx = std::stoull(idx_s);
        if (idx >= n_rows)
            throw DataError("split: manifest row index " + idx_s + " out of range");
        if (split == "train")
            out.train.push_back(idx);
        else if (split == "val")
            out.val.push_back(idx);
        else if (split == "test")
            out.test.push_back(idx);
        else
            throw DataError("split: unknown split tag '" + split + "' in manifest");
        ++seen;
    }
    if (seen != n_rows)
        throw DataError("split: manifest covers " + std::to_string(seen) + " rows, dataset has " +
                        std::to_string(n_rows));
    return out;
}

}  // namespace relia::data
