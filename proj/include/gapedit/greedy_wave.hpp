#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "gapedit/byte_string.hpp"
#include "gapedit/greedy_match.hpp"
#include "gapedit/no_prep.hpp"
#include "gapedit/one_sided.hpp"
#include "gapedit/rolling_hash.hpp"

namespace gapedit {

/// Below every finite wave value; adding to it leaves it unchanged.
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

inline std::int64_t wave_add(std::int64_t h, std::int64_t d) {
    return h == kNegInf ? kNegInf : h + d;
}

/// Nearest multiple of l, ties rounded down.
std::int64_t round_to_multiple(std::int64_t x, std::int64_t l);

enum class WaveMove : std::uint8_t { none, start, stay, from_below, from_above, oracle };

/// h[i, j] for i in [0, k] and j in {-m l, ..., m l}, m = floor(k / l).
/// Diagonal j means B has consumed h + j symbols when A has consumed h.
struct WaveTable {
    std::int64_t k = 0;
    std::int64_t l = 1;
    std::int64_t m = 0;
    std::vector<std::int64_t> h;
    std::vector<WaveMove> move;  // which transition produced each value

    std::int64_t columns() const noexcept { return 2 * m + 1; }
    std::size_t slot(std::int64_t i, std::int64_t j) const {
        return static_cast<std::size_t>(i * columns() + (j / l + m));
    }
    std::int64_t at(std::int64_t i, std::int64_t j) const { return h[slot(i, j)]; }
};

/// MaxShiftAlign_{l,k}(A, B, i_A, i_B); callers promise |i_A - i_B| <= k.
class MaxShiftAlignOracle {
public:
    virtual ~MaxShiftAlignOracle() = default;
    virtual std::int64_t query(std::int64_t i_a, std::int64_t i_b, OpCounters& counters) const = 0;
};

/// Exhaustive shifted alignment with shift window l. Test reference.
class BruteForceShiftAlign final : public MaxShiftAlignOracle {
public:
    BruteForceShiftAlign(const ByteString& a, const ByteString& b, std::int64_t l) : a_(a), b_(b), l_(l) {}
    std::int64_t query(std::int64_t i_a, std::int64_t i_b, OpCounters& counters) const override;

private:
    const ByteString& a_;
    const ByteString& b_;
    std::int64_t l_;
};

/// Exact longest common extension at (i_A, i_B).
class LceShiftAlign final : public MaxShiftAlignOracle {
public:
    LceShiftAlign(const ByteString& a, const ByteString& b) : a_(a), b_(b) {}
    std::int64_t query(std::int64_t i_a, std::int64_t i_b, OpCounters& counters) const override;

private:
    const ByteString& a_;
    const ByteString& b_;
};

struct WaveResult {
    Verdict verdict = Verdict::large;
    OpCounters counters;
    WaveTable table;
};

/// Throws std::invalid_argument unless 1 <= l <= k and |A| == |B|.
WaveResult greedy_wave(const ByteString& a, const ByteString& b, std::int64_t k, std::int64_t l,
                       const MaxShiftAlignOracle& oracle);

/// Walks the recorded moves back from (k, 0) and sums the exact edit
/// distance of each step's A- and B-segment; the segments partition both
/// strings, so `bound` >= ED(A, B).
struct WaveCertificate {
    std::int64_t bound = 0;
    std::int64_t budget = 0;  // 10 k l
    bool within_budget = false;
};

WaveCertificate certify_wave(const ByteString& a, const ByteString& b, const WaveTable& table);

/// Number of pairs violating h[i', j'] >= h[i, j] + l (i' - i) whenever
/// i' >= i, |j' - j| <= l (i' - i) and h[i, j] is finite.
std::int64_t count_jump_violations(const WaveTable& table);

/// Offsets a * ceil(sqrt(k)) for a in [-2 ceil(sqrt(k)), 2 ceil(sqrt(k))].
ShiftedHashFamily process_a_wave(const ByteString& a, std::int64_t l, std::int64_t k,
                                 const HashContextPtr& ctx, const SamplePtr& sample);

/// Requires l >= ceil(sqrt(k)); fam_a from process_a_wave, fam_b from process_b.
std::int64_t max_shift_align_noprep(const ShiftedHashFamily& fam_a, const ShiftedHashFamily& fam_b,
                                    std::int64_t i_a, std::int64_t i_b, std::int64_t k,
                                    std::int64_t l, std::int64_t n, OpCounters& counters);

class NoPrepMaxShiftAlign final : public MaxShiftAlignOracle {
public:
    NoPrepMaxShiftAlign(const ShiftedHashFamily& fam_a, const ShiftedHashFamily& fam_b, std::int64_t k,
                        std::int64_t l, std::int64_t n)
        : fam_a_(fam_a), fam_b_(fam_b), k_(k), l_(l), n_(n) {}
    std::int64_t query(std::int64_t i_a, std::int64_t i_b, OpCounters& counters) const override {
        ++counters.oracle_queries;
        return max_shift_align_noprep(fam_a_, fam_b_, i_a, i_b, k_, l_, n_, counters);
    }

private:
    const ShiftedHashFamily& fam_a_;
    const ShiftedHashFamily& fam_b_;
    std::int64_t k_;
    std::int64_t l_;
    std::int64_t n_;
};

/// Wave tables over shifts |a| <= k + l, granularity l.
OneSidedIndex one_sided_preprocess_wave(const ByteString& a, std::int64_t l, std::int64_t k,
                                        const HashConfig& cfg);
OneSidedIndex one_sided_preprocess_wave(const ByteString& a, std::int64_t l, std::int64_t k,
                                        const HashConfig& cfg, const SamplePtr& sample);

std::int64_t one_sided_max_shift_align(const OneSidedIndex& idx, const RollingHashState& h_b,
                                       std::int64_t i_a, std::int64_t i_b, OpCounters& counters);

class IndexedMaxShiftAlign final : public MaxShiftAlignOracle {
public:
    IndexedMaxShiftAlign(const OneSidedIndex& idx, const RollingHashState& h_b) : idx_(idx), h_b_(h_b) {}
    std::int64_t query(std::int64_t i_a, std::int64_t i_b, OpCounters& counters) const override {
        ++counters.oracle_queries;
        return one_sided_max_shift_align(idx_, h_b_, i_a, i_b, counters);
    }

private:
    const OneSidedIndex& idx_;
    const RollingHashState& h_b_;
};

enum class WaveMode : std::uint8_t { noprep, one_sided, two_sided };

struct WaveRun {
    WaveResult result;
    std::int64_t sample_size = 0;
    std::int64_t preprocess_ops = 0;
};

/// Validates (k, l, mode), builds whatever the mode needs from seed and runs GreedyWave.
WaveRun gap_wave(const ByteString& a, const ByteString& b, std::int64_t k, std::int64_t l,
                 WaveMode mode, std::uint64_t seed);

/// One- or two-sided run against a prebuilt wave index of A. In two-sided
/// mode H_B counts as preprocessing rather than query work.
WaveRun gap_wave_indexed(const OneSidedIndex& idx, const ByteString& a, const ByteString& b,
                         WaveMode mode);

/// Throws std::invalid_argument describing why (k, l, mode) is unusable for n.
void validate_wave_parameters(std::int64_t n, std::int64_t k, std::int64_t l, WaveMode mode);

}  // namespace gapedit
