#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gapedit {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// FNV-1a; used only to turn stream names into tags.
constexpr std::uint64_t stream_tag(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Independent generator for a named sub-stream of one seed, e.g.
/// substream(seed, "sample") and substream(seed, "x") never share state.
inline Rng substream(std::uint64_t seed, std::string_view name) {
    return Rng(splitmix64(seed ^ stream_tag(name)));
}

/// Derived seed for the t-th member of a batch.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t t) {
    return splitmix64(splitmix64(seed) + t);
}

}  // namespace gapedit
