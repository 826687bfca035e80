#pragma once

#include <cstdint>
#include <vector>

#include "gapedit/byte_string.hpp"
#include "gapedit/greedy_match.hpp"
#include "gapedit/rolling_hash.hpp"

namespace gapedit {

/// ceil(sqrt(k)) for k >= 0.
std::int64_t ceil_sqrt(std::int64_t k);

enum class Side : std::uint8_t { a, b };

/// Rolling-hash states of one string over shifted views S + offset of a
/// shared sample.
struct ShiftedHashFamily {
    Side side = Side::a;
    std::int64_t step = 1;               // ceil(sqrt(k))
    std::vector<std::int64_t> offsets;   // offsets[t] is the view shift of states[t]
    std::vector<RollingHashState> states;
    std::int64_t symbols_hashed = 0;

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(states.size()); }
};

/// Offsets a*s for a in [-s, s], s = ceil(sqrt(k)).
ShiftedHashFamily process_a(const ByteString& a, std::int64_t k, const HashContextPtr& ctx,
                            const SamplePtr& sample);
/// Offsets -b for b in [-s, s].
ShiftedHashFamily process_b(const ByteString& b, std::int64_t k, const HashContextPtr& ctx,
                            const SamplePtr& sample);

/// Binary search over d in [min(2k, n-i_B+1), n-i_B+1]; a probe at d_mid
/// intersects the hashes of the k-shaved windows of every A state with
/// those of every B state.
std::int64_t max_align(const ShiftedHashFamily& fam_a, const ShiftedHashFamily& fam_b,
                       std::int64_t i_b, std::int64_t k, std::int64_t n, OpCounters& counters);

class NoPrepMaxAlign final : public MaxAlignOracle {
public:
    NoPrepMaxAlign(const ShiftedHashFamily& fam_a, const ShiftedHashFamily& fam_b, std::int64_t k,
                   std::int64_t n)
        : fam_a_(fam_a), fam_b_(fam_b), k_(k), n_(n) {}
    std::int64_t query(std::int64_t i_b, OpCounters& counters) const override {
        ++counters.oracle_queries;
        return max_align(fam_a_, fam_b_, i_b, k_, n_, counters);
    }
    OracleGrade grade() const override { return OracleGrade::approximately_correct; }

private:
    const ShiftedHashFamily& fam_a_;
    const ShiftedHashFamily& fam_b_;
    std::int64_t k_;
    std::int64_t n_;
};

namespace detail {

ShiftedHashFamily build_family(const ByteString& s, Side side, std::int64_t step,
                               const std::vector<std::int64_t>& offsets, const HashContextPtr& ctx,
                               const SamplePtr& sample);

/// True when the two hash lists share a value. Sorts both in place.
bool sorted_intersect(std::vector<std::uint64_t>& x, std::vector<std::uint64_t>& y);

}  // namespace detail

struct GapRun {
    GreedyMatchResult result;
    std::int64_t sample_size = 0;
};

/// Draws S at granularity k from seed, builds both families and runs GreedyMatch.
GapRun gap_noprep(const ByteString& a, const ByteString& b, std::int64_t k, std::uint64_t seed,
                  bool record_trace = false);

}  // namespace gapedit
