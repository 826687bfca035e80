#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gapedit/byte_string.hpp"

namespace gapedit {

/// 2^61 - 1. Prime, and large enough that p > n^2 * 256 for n <= 2^26.
inline constexpr std::uint64_t kMersenne61 = (1ULL << 61) - 1;

inline std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) noexcept {
    const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(z & kMersenne61) + static_cast<std::uint64_t>(z >> 61);
    if (r >= kMersenne61) {
        r -= kMersenne61;
    }
    return r;
}

inline std::uint64_t addmod61(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t r = a + b;
    return r >= kMersenne61 ? r - kMersenne61 : r;
}

inline std::uint64_t submod61(std::uint64_t a, std::uint64_t b) noexcept {
    return a >= b ? a - b : a + kMersenne61 - b;
}

/// Square-and-multiply, independent of the cached power table.
std::uint64_t powmod61(std::uint64_t base, std::uint64_t e) noexcept;

struct HashConfig {
    std::uint64_t p = kMersenne61;
    std::uint64_t x = 0;
    std::uint64_t rng_seed = 0;

    /// x uniform in [0, p-1] from the "x" sub-stream of seed.
    static HashConfig from_seed(std::uint64_t seed);

    friend bool operator==(const HashConfig&, const HashConfig&) = default;
};

/// HashConfig plus x^0 .. x^max_power, computed once and shared by every
/// state built against it.
class HashContext {
public:
    HashContext(HashConfig cfg, std::int64_t max_power);

    const HashConfig& config() const noexcept { return cfg_; }
    std::uint64_t x() const noexcept { return cfg_.x; }
    std::int64_t max_power() const noexcept { return static_cast<std::int64_t>(powers_.size()) - 1; }
    std::uint64_t power(std::int64_t m) const noexcept { return powers_[static_cast<std::size_t>(m)]; }

private:
    HashConfig cfg_;
    std::vector<std::uint64_t> powers_;
};

using HashContextPtr = std::shared_ptr<const HashContext>;

HashContextPtr make_hash_context(const HashConfig& cfg, std::int64_t n);

struct SampleSet {
    std::vector<std::int64_t> indices;  // strictly increasing, within [1, n]
    std::int64_t n = 0;
    std::int64_t granularity = 1;
    double rate = 1.0;
    bool anchored = false;

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(indices.size()); }
    bool contains(std::int64_t i) const;

    friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

using SamplePtr = std::shared_ptr<const SampleSet>;

/// min(4 ln n / granularity, 1), with granularity 1 always giving 1.
double sample_rate(std::int64_t n, std::int64_t granularity);

/// Independent inclusion at sample_rate(n, granularity) using the "sample"
/// sub-stream of cfg.rng_seed; with force_anchors every multiple of
/// granularity and n-1 are added. Throws std::invalid_argument for n < 1
/// or granularity < 1.
SampleSet draw_sample(std::int64_t n, std::int64_t granularity, bool force_anchors,
                      const HashConfig& cfg);

/// Every index in [1, n].
SampleSet full_sample(std::int64_t n);

/// Prefix hashes of a string read at the positions of a shifted sample view
/// S + offset. The view is never materialized.
class RollingHashState {
public:
    RollingHashState() = default;
    RollingHashState(HashContextPtr ctx, SamplePtr sample, std::int64_t offset,
                     std::vector<std::uint64_t> prefixes);

    const HashContextPtr& context() const noexcept { return ctx_; }
    const SamplePtr& sample() const noexcept { return sample_; }
    std::int64_t offset() const noexcept { return offset_; }
    std::span<const std::uint64_t> prefixes() const noexcept { return prefixes_; }

    /// Hash of the symbols at sampled positions (of the shifted view) inside
    /// [i, j]; 0 when there are none.
    std::uint64_t retrieve(std::int64_t i, std::int64_t j) const;

    /// Half-open range [lo, hi) of sample ranks whose shifted positions lie in [i, j].
    std::pair<std::int64_t, std::int64_t> rank_range(std::int64_t i, std::int64_t j) const;

    /// Hash of the sample ranks [lo, hi).
    std::uint64_t hash_ranks(std::int64_t lo, std::int64_t hi) const noexcept {
        if (hi <= lo) {
            return 0;
        }
        const auto* h = prefixes_.data();
        return submod61(h[hi], mulmod61(h[lo], ctx_->power(hi - lo)));
    }

private:
    HashContextPtr ctx_;
    SamplePtr sample_;
    std::int64_t offset_ = 0;
    std::vector<std::uint64_t> prefixes_;
};

/// H[0] = 0, H[t] = H[t-1] * x + A[S[t] + offset] mod p.
RollingHashState init_rolling_hash(const ByteString& a, HashContextPtr ctx, SamplePtr sample,
                                   std::int64_t offset = 0);

inline std::uint64_t retrieve_rolling_hash(const RollingHashState& h, std::int64_t i,
                                           std::int64_t j) {
    return h.retrieve(i, j);
}

/// Reference hash of explicit symbols, used by tests.
std::uint64_t hash_symbols(std::span<const Symbol> symbols, std::uint64_t x);

/// JSON sidecar holding p, x, rng_seed and the sample set.
std::string hash_sidecar_json(const HashConfig& cfg, const SampleSet& sample);
void parse_hash_sidecar_json(const std::string& text, HashConfig& cfg, SampleSet& sample);

}  // namespace gapedit
