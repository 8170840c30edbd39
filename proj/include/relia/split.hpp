#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relia/dataset.hpp"

namespace relia::data {

struct SplitSpec {
    double train_frac = 0.75;
    double val_frac = 0.15;
    double test_frac = 0.10;
    std::uint64_t seed = 0;
};

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> val;
    std::vector<std::size_t> test;
};

/// Group-stratified split: each group key lands in exactly one split. Greedy
/// two-pass assignment: groups carrying minority points go first (largest
/// minority count first), each to the split with the largest combined
/// minority+size deficit normalized by that split's targets; minority-free
/// groups then fill remaining size capacity. This pulls every split's
/// minority frequency toward the global one as far as group granularity
/// allows. The seed permutes tie order; assignment is deterministic given it.
SplitIndices stratified_group_split(const Dataset& data, const SplitSpec& spec);

void write_split_manifest(const Dataset& data, const SplitIndices& splits, const std::string& path);
SplitIndices load_split_manifest(const std::string& path, std::size_t n_rows);

}  // namespace relia::data
