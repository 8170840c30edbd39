#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "relia/csv.hpp"
#include "relia/errors.hpp"
#include "relia/split.hpp"
#include "relia/standardize.hpp"
#include "relia/synthetic.hpp"
#include "test_util.hpp"

using namespace relia;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

data::Dataset tiny_dataset() {
    data::Dataset d;
    d.n_rows = 4;
    d.n_features = 2;
    d.features = {1.0, 10.0, 3.0, 20.0, 5.0, 30.0, 7.0, 40.0};
    d.labels = {0, 1, 0, 1};
    d.group_keys = {"a", "a", "b", "b"};
    d.feature_names = {"f0", "f1"};
    return d;
}

}  // namespace

TEST_CASE("load_csv parses a small file") {
    testutil::TempDir dir("csv_small");
    write_file(dir.file("d.csv"), "f1,f2,label,grp\n1.5,2,0,g1\n3,4.25,1,g2\n-1,0,0,g1\n");
    const data::Dataset d = data::load_csv(dir.file("d.csv"), "label", "grp");
    CHECK(d.n_rows == 3);
    CHECK(d.n_features == 2);
    CHECK(d.feature_names == std::vector<std::string>{"f1", "f2"});
    CHECK(d.feature(0, 0) == 1.5);
    CHECK(d.feature(1, 1) == 4.25);
    CHECK(d.labels == std::vector<int>{0, 1, 0});
    CHECK(d.group_keys[1] == "g2");
}

TEST_CASE("load_csv error cases") {
    testutil::TempDir dir("csv_err");
    CHECK_THROWS_AS(data::load_csv(dir.file("nope.csv"), "label", "grp"), DataError);

    write_file(dir.file("bad_label.csv"), "a,label,grp\n1,2,g\n");
    CHECK_THROWS_WITH_AS(data::load_csv(dir.file("bad_label.csv"), "label", "grp"),
                         doctest::Contains("row 0"), DataError);

    write_file(dir.file("empty.csv"), "a,label,grp\n");
    CHECK_THROWS_WITH_AS(data::load_csv(dir.file("empty.csv"), "label", "grp"),
                         doctest::Contains("empty dataset"), DataError);

    write_file(dir.file("dup.csv"), "a,a,label,grp\n1,2,0,g\n");
    CHECK_THROWS_WITH_AS(data::load_csv(dir.file("dup.csv"), "label", "grp"),
                         doctest::Contains("duplicate"), DataError);

    write_file(dir.file("nonnum.csv"), "a,label,grp\nxyz,0,g\n");
    CHECK_THROWS_WITH_AS(data::load_csv(dir.file("nonnum.csv"), "label", "grp"),
                         doctest::Contains("'a'"), DataError);

    write_file(dir.file("missing.csv"), "a,b,label,grp\n1,,0,g\n");
    CHECK_THROWS_AS(data::load_csv(dir.file("missing.csv"), "label", "grp"), DataError);
}

TEST_CASE("csv round trip is bit-exact") {
    testutil::TempDir dir("csv_rt");
    data::SyntheticSpec spec;
    spec.n_points = 200;
    spec.minority_freq = 0.2;
    spec.n_groups = 5;
    spec.seed = 3;
    const data::Dataset d = data::generate_synthetic(spec);
    data::write_csv(d, dir.file("d.csv"));
    const data::Dataset back = data::load_csv(dir.file("d.csv"), "label", "group");
    CHECK(back.n_rows == d.n_rows);
    CHECK(back.features == d.features);  // exact, not approximate
    CHECK(back.labels == d.labels);
    CHECK(back.group_keys == d.group_keys);
}

TEST_CASE("fit_standardize uses the population convention") {
    data::Dataset d;
    d.n_rows = 2;
    d.n_features = 1;
    d.features = {1.0, 3.0};
    d.labels = {0, 1};
    d.group_keys = {"a", "b"};
    d.feature_names = {"x"};
    const auto stats = data::fit_standardize(d, {0, 1});
    CHECK(stats.means[0] == doctest::Approx(2.0));
    CHECK(stats.std_devs[0] == doctest::Approx(1.0));  // population: sqrt(((1)^2+(1)^2)/2)
}

TEST_CASE("standardize is idempotent on standardized data") {
    const data::Dataset d = tiny_dataset();
    std::vector<std::size_t> rows = {0, 1, 2, 3};
    const auto stats = data::fit_standardize(d, rows);
    const data::Dataset z = data::apply_standardize(d, stats);
    const auto stats2 = data::fit_standardize(z, rows);
    for (std::size_t j = 0; j < d.n_features; ++j) {
        CHECK(std::abs(stats2.means[j]) < 1e-9);
        CHECK(stats2.std_devs[j] == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("constant feature is rejected by name") {
    data::Dataset d = tiny_dataset();
    d.features = {5.0, 10.0, 5.0, 20.0, 5.0, 30.0, 5.0, 40.0};
    CHECK_THROWS_WITH_AS(data::fit_standardize(d, {0, 1, 2, 3}), doctest::Contains("f0"),
                         DataError);
}

TEST_CASE("apply/invert round trip") {
    const data::Dataset d = tiny_dataset();
    const auto stats = data::fit_standardize(d, {0, 1, 2, 3});
    const data::Dataset z = data::apply_standardize(d, stats);
    const data::Dataset back = data::invert_standardize(z, stats);
    for (std::size_t i = 0; i < d.features.size(); ++i)
        CHECK(back.features[i] == doctest::Approx(d.features[i]).epsilon(1e-10));

    SUBCASE("centering and scaling examples") {
        data::StandardizationStats s;
        s.means = {2.0, 2.0};
        s.std_devs = {1.0, 2.0};
        data::Dataset one = tiny_dataset();
        one.n_rows = 1;
        one.features = {2.0, 4.0};
        one.labels = {0};
        one.group_keys = {"a"};
        const data::Dataset out = data::apply_standardize(one, s);
        CHECK(out.feature(0, 0) == 0.0);
        CHECK(out.feature(0, 1) == 1.0);
    }

    SUBCASE("dimension mismatch") {
        data::StandardizationStats s;
        s.means = {0.0};
        s.std_devs = {1.0};
        CHECK_THROWS_AS(data::apply_standardize(d, s), DataError);
    }
}

TEST_CASE("stratified split partitions rows by group") {
    data::SyntheticSpec spec;
    spec.n_points = 2000;
    spec.minority_freq = 0.1;
    spec.n_groups = 40;
    spec.separation = 2.0;
    spec.seed = 17;
    const data::Dataset d = data::generate_synthetic(spec);
    data::SplitSpec split_spec;
    split_spec.seed = 1;
    const auto splits = data::stratified_group_split(d, split_spec);

    std::set<std::size_t> seen;
    for (const auto* part : {&splits.train, &splits.val, &splits.test})
        for (std::size_t r : *part) CHECK(seen.insert(r).second);
    CHECK(seen.size() == d.n_rows);

    // No group key straddles splits.
    std::map<std::string, int> owner;
    auto claim = [&](const std::vector<std::size_t>& rows, int who) {
        for (std::size_t r : rows) {
            auto [it, fresh] = owner.emplace(d.group_keys[r], who);
            CHECK(it->second == who);
            (void)fresh;
        }
    };
    claim(splits.train, 0);
    claim(splits.val, 1);
    claim(splits.test, 2);

    // Sizes roughly follow the fractions.
    CHECK(splits.train.size() > d.n_rows / 2);
    CHECK(splits.val.size() > 0);
    CHECK(splits.test.size() > 0);

    // Minority frequency of each split lands near the global one.
    const double global_rate = static_cast<double>(d.count_label(1)) / static_cast<double>(d.n_rows);
    for (const auto* part : {&splits.train, &splits.val, &splits.test}) {
        std::size_t ones = 0;
        for (std::size_t r : *part)
            if (d.labels[r] == 1) ++ones;
        const double rate = static_cast<double>(ones) / static_cast<double>(part->size());
        CHECK(std::abs(rate - global_rate) < 0.5 * global_rate);
    }
}

TEST_CASE("split determinism and error cases") {
    data::SyntheticSpec spec;
    spec.n_points = 500;
    spec.minority_freq = 0.1;
    spec.n_groups = 8;
    spec.seed = 23;
    const data::Dataset d = data::generate_synthetic(spec);
    data::SplitSpec split_spec;
    split_spec.seed = 9;
    const auto a = data::stratified_group_split(d, split_spec);
    const auto b = data::stratified_group_split(d, split_spec);
    CHECK(a.train == b.train);
    CHECK(a.val == b.val);
    CHECK(a.test == b.test);

    SUBCASE("fewer groups than splits") {
        data::Dataset two = d;
        for (auto& g : two.group_keys) g = (g < "g4") ? "left" : "right";
        CHECK_THROWS_AS(data::stratified_group_split(two, split_spec), DataError);
    }
    SUBCASE("fractions must sum to 1") {
        data::SplitSpec bad;
        bad.train_frac = 0.5;
        bad.val_frac = 0.2;
        bad.test_frac = 0.2;
        CHECK_THROWS_AS(data::stratified_group_split(d, bad), ConfigError);
    }
}

TEST_CASE("split manifest round trip") {
    testutil::TempDir dir("split_manifest");
    data::SyntheticSpec spec;
    spec.n_points = 300;
    spec.minority_freq = 0.1;
    spec.n_groups = 6;
    spec.seed = 2;
    const data::Dataset d = data::generate_synthetic(spec);
    data::SplitSpec split_spec;
    const auto splits = data::stratified_group_split(d, split_spec);
    data::write_split_manifest(d, splits, dir.file("splits.csv"));
    const auto back = data::load_split_manifest(dir.file("splits.csv"), d.n_rows);
    CHECK(back.train == splits.train);
    CHECK(back.val == splits.val);
    CHECK(back.test == splits.test);
}

TEST_CASE("synthetic minority count hits the binomial window") {
    data::SyntheticSpec spec;
    spec.n_points = 10000;
    spec.m_features = 8;
    spec.minority_freq = 0.01;
    spec.seed = 5;
    const data::Dataset d = data::generate_synthetic(spec);
    const std::size_t minority = d.count_label(1);
    CHECK(minority >= 60);
    CHECK(minority <= 140);

    // 4-sigma binomial property over several seeds and sizes.
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        data::SyntheticSpec s2;
        s2.n_points = 1000 + 700 * seed;
        s2.minority_freq = 0.05;
        s2.seed = seed;
        const data::Dataset g = data::generate_synthetic(s2);
        const double n = static_cast<double>(s2.n_points);
        const double expected = n * s2.minority_freq;
        const double sigma = std::sqrt(n * s2.minority_freq * (1.0 - s2.minority_freq));
        CHECK(std::abs(static_cast<double>(g.count_label(1)) - expected) <= 4.0 * sigma);
    }
}

TEST_CASE("synthetic generator is deterministic and validates input") {
    data::SyntheticSpec spec;
    spec.n_points = 400;
    spec.minority_freq = 0.05;
    spec.seed = 31;
    const data::Dataset a = data::generate_synthetic(spec);
    const data::Dataset b = data::generate_synthetic(spec);
    CHECK(a.features == b.features);
    CHECK(a.labels == b.labels);
    CHECK(a.group_keys == b.group_keys);

    spec.minority_freq = 0.5;
    CHECK_THROWS_AS(data::generate_synthetic(spec), ConfigError);
    spec.minority_freq = 0.05;
    spec.m_features = 0;
    CHECK_THROWS_AS(data::generate_synthetic(spec), ConfigError);
}

TEST_CASE("dataset validation catches structural problems") {
    data::Dataset d = tiny_dataset();
    CHECK_NOTHROW(d.validate());
    d.labels[2] = 7;
    CHECK_THROWS_AS(d.validate(), DataError);
    d = tiny_dataset();
    d.features[3] = std::nan("");
    CHECK_THROWS_AS(d.validate(), DataError);
}
