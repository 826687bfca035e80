#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapedit/byte_string.hpp"
#include "gapedit/greedy_match.hpp"
#include "gapedit/no_prep.hpp"
#include "gapedit/rolling_hash.hpp"

namespace gapedit {

enum class IndexKind : std::uint8_t { gap = 1, wave = 2 };

/// Power-of-two length hash tables of A over all shifted sample views.
///
/// For the gap variant (granularity g = k, shifts |a| <= k) a hash computed
/// at position i is stored once, in base cell (i0, floor(i/g)); the table
/// cell T_A[i0, c] is the union of base cells c-1, c, c+1, which is what
/// writing every hash into all three cells produces.
///
/// The wave variant (granularity g = l, shifts |a| <= k + l) adds a shift
/// axis floor(a/l) and T_A[e0, c, s] is the union of the 3x3 base cells
/// around (c, s).
///
/// Positions i range over (S+1) u (S-2^i0+1) u {1} within [1, n]; a hash is
/// kept when i+2^i0-1+a <= n and every sampled position it reads lies in
/// [1, n].
class OneSidedIndex {
public:
    IndexKind kind() const noexcept { return kind_; }
    std::int64_t n() const noexcept { return n_; }
    std::int64_t k() const noexcept { return k_; }
    std::int64_t granularity() const noexcept { return g_; }
    std::int64_t max_shift() const noexcept { return max_shift_; }
    std::int64_t levels() const noexcept { return levels_; }
    std::int64_t columns() const noexcept { return ncols_; }
    std::int64_t shift_column_min() const noexcept { return acol_min_; }
    std::int64_t shift_columns() const noexcept { return nacols_; }
    const HashContextPtr& context() const noexcept { return ctx_; }
    const SamplePtr& sample() const noexcept { return sample_; }
    std::int64_t preprocess_ops() const noexcept { return preprocess_ops_; }
    std::int64_t stored_values() const noexcept { return static_cast<std::int64_t>(values_.size()); }

    /// Base cell contents (sorted, distinct). Empty outside the grid.
    std::vector<std::uint64_t> base_cell(std::int64_t level, std::int64_t col, std::int64_t shift_col = 0) const;
    /// T_A cell contents: the union over the neighbouring base cells.
    std::vector<std::uint64_t> cell(std::int64_t level, std::int64_t col, std::int64_t shift_col = 0) const;
    bool contains(std::int64_t level, std::int64_t col, std::int64_t shift_col, std::uint64_t h) const;

    void save(const std::string& path) const;
    static OneSidedIndex load(const std::string& path);
    std::vector<std::uint8_t> serialize() const;
    static OneSidedIndex deserialize(const std::vector<std::uint8_t>& data);

private:
    friend OneSidedIndex build_shift_tables(const ByteString&, IndexKind, std::int64_t, std::int64_t,
                                            const HashConfig&, const SamplePtr&);
    void set_geometry();
    bool base_contains(std::int64_t level, std::int64_t col, std::int64_t shift_col, std::uint64_t h) const;
    std::size_t key(std::int64_t level, std::int64_t col, std::int64_t shift_col) const;

    IndexKind kind_ = IndexKind::gap;
    std::int64_t n_ = 0;
    std::int64_t k_ = 0;
    std::int64_t g_ = 1;
    std::int64_t max_shift_ = 0;
    std::int64_t levels_ = 0;
    std::int64_t ncols_ = 0;
    std::int64_t acol_min_ = 0;
    std::int64_t nacols_ = 1;
    HashContextPtr ctx_;
    SamplePtr sample_;
    std::vector<std::int64_t> cell_start_;
    std::vector<std::uint64_t> values_;
    std::int64_t preprocess_ops_ = 0;
};

/// Shared builder for both variants; granularity is k (gap) or l (wave).
/// The sample must be anchored at that granularity over |A|.
OneSidedIndex build_shift_tables(const ByteString& a, IndexKind kind, std::int64_t k,
                                 std::int64_t granularity, const HashConfig& cfg,
                                 const SamplePtr& sample);

/// Draws the anchored sample at granularity k from cfg and builds the gap tables.
OneSidedIndex one_sided_preprocess(const ByteString& a, std::int64_t k, const HashConfig& cfg);
OneSidedIndex one_sided_preprocess(const ByteString& a, std::int64_t k, const HashConfig& cfg,
                                   const SamplePtr& sample);

/// H_B over the index's own sample, unshifted.
RollingHashState one_sided_process_b(const OneSidedIndex& idx, const ByteString& b);

/// Descending powers of two from 2^floor(log n); the first d whose B-window
/// hash is in T_A[log d, floor(i_B/k)] wins. Windows running past n are
/// skipped.
std::int64_t one_sided_max_align(const OneSidedIndex& idx, const RollingHashState& h_b,
                                 std::int64_t i_b, OpCounters& counters);

class OneSidedMaxAlign final : public MaxAlignOracle {
public:
    OneSidedMaxAlign(const OneSidedIndex& idx, const RollingHashState& h_b) : idx_(idx), h_b_(h_b) {}
    std::int64_t query(std::int64_t i_b, OpCounters& counters) const override {
        ++counters.oracle_queries;
        return one_sided_max_align(idx_, h_b_, i_b, counters);
    }
    OracleGrade grade() const override { return OracleGrade::half_approximately_correct; }

private:
    const OneSidedIndex& idx_;
    const RollingHashState& h_b_;
};

/// Processes B against a prebuilt index and runs GreedyMatch.
GapRun gap_one_sided(const OneSidedIndex& idx, const ByteString& a, const ByteString& b,
                     bool record_trace = false);

/// Floor division for possibly negative numerators, positive divisor.
inline std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    const std::int64_t q = x / y;
    return (x % y != 0 && (x < 0)) ? q - 1 : q;
}

inline std::int64_t ceil_div(std::int64_t x, std::int64_t y) {
    return -floor_div(-x, y);
}

}  // namespace gapedit
