#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapedit/byte_string.hpp"
#include "gapedit/greedy_match.hpp"
#include "gapedit/no_prep.hpp"
#include "gapedit/rolling_hash.hpp"

namespace gapedit {

inline constexpr std::int64_t kTwoSidedDefaultLimit = 4096;

/// T_A[i, j] = { hash of A[i+a, j+a] : |a| <= k, [i+a, j+a] inside [1, n] }.
///
/// Cells are not stored one by one (n^2 (2k+1) values). For every length L
/// the index keeps the hashes of all length-L substrings sorted by
/// (hash, start); cell (i, j) is the slice with start in [i-k, i+k], so a
/// membership test is one binary search.
class TwoSidedIndex {
public:
    std::int64_t n() const noexcept { return n_; }
    std::int64_t k() const noexcept { return k_; }
    const HashConfig& config() const noexcept { return ctx_->config(); }
    const HashContextPtr& context() const noexcept { return ctx_; }
    /// Hashes computed while building (one per substring).
    std::int64_t preprocess_ops() const noexcept { return static_cast<std::int64_t>(hashes_.size()); }

    bool contains(std::int64_t i, std::int64_t j, std::uint64_t h) const;
    /// Sorted distinct values of T_A[i, j]; at most 2k+1 of them.
    std::vector<std::uint64_t> cell(std::int64_t i, std::int64_t j) const;

    void save(const std::string& path) const;
    static TwoSidedIndex load(const std::string& path);
    std::vector<std::uint8_t> serialize() const;
    static TwoSidedIndex deserialize(const std::vector<std::uint8_t>& data);

private:
    friend TwoSidedIndex two_sided_preprocess(const ByteString&, std::int64_t, const HashConfig&,
                                              std::int64_t);
    void build_from_rows(std::vector<std::uint64_t> rows);

    HashContextPtr ctx_;
    std::int64_t n_ = 0;
    std::int64_t k_ = 0;
    std::vector<std::int64_t> first_;      // first_[L]: offset of length L in the arrays
    std::vector<std::uint64_t> hashes_;    // per length, sorted by (hash, start)
    std::vector<std::uint32_t> starts_;
};

/// Throws LimitError when |A| exceeds limit, std::invalid_argument for k < 0.
TwoSidedIndex two_sided_preprocess(const ByteString& a, std::int64_t k, const HashConfig& cfg,
                                   std::int64_t limit = kTwoSidedDefaultLimit);

/// Full-sample prefix hashes of B under the index's configuration.
RollingHashState two_sided_process_b(const TwoSidedIndex& idx, const ByteString& b);

/// Largest d in [0, n-i_B+1] with hash(B[i_B, i_B+d-1]) in T_A[i_B, i_B+d-1].
std::int64_t two_sided_max_align(const TwoSidedIndex& idx, const RollingHashState& h_b,
                                 std::int64_t i_b, OpCounters& counters);

class TwoSidedMaxAlign final : public MaxAlignOracle {
public:
    TwoSidedMaxAlign(const TwoSidedIndex& idx, const RollingHashState& h_b) : idx_(idx), h_b_(h_b) {}
    std::int64_t query(std::int64_t i_b, OpCounters& counters) const override {
        ++counters.oracle_queries;
        return two_sided_max_align(idx_, h_b_, i_b, counters);
    }
    OracleGrade grade() const override { return OracleGrade::correct; }

private:
    const TwoSidedIndex& idx_;
    const RollingHashState& h_b_;
};

/// Processes B against a prebuilt index and runs GreedyMatch with k = idx.k().
GapRun gap_two_sided(const TwoSidedIndex& idx, const ByteString& a, const ByteString& b,
                     bool record_trace = false);

}  // namespace gapedit
