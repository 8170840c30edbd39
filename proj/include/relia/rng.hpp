#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace relia {

using Rng = std::mt19937_64;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

/// Derives a stream seed from (global seed, stage tag, item id). Streams for
/// distinct (tag, id) pairs are independent, so per-point work can run in any
/// order or in parallel and still reproduce bit-identical results.
inline std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view stage_tag,
                                 std::uint64_t item_id = 0) {
    std::uint64_t h = detail::splitmix64(global_seed);
    h = detail::splitmix64(h ^ detail::fnv1a(stage_tag));
    h = detail::splitmix64(h ^ item_id);
    return h;
}

}  // namespace relia
