#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gapedit/byte_string.hpp"

namespace gapedit {

enum class Verdict : std::uint8_t { small, large };

std::string_view to_string(Verdict v);

enum class OracleGrade : std::uint8_t { correct, approximately_correct, half_approximately_correct };

/// Exact operation counts. Oracles add to these; nothing is sampled or estimated.
struct OpCounters {
    std::int64_t oracle_queries = 0;
    std::int64_t hash_retrievals = 0;
    std::int64_t table_lookups = 0;
    std::int64_t symbols_hashed = 0;   // InitRollingHash work on the query side
    std::int64_t preprocess_ops = 0;   // hashes computed and stored while building an index

    OpCounters& operator+=(const OpCounters& o) {
        oracle_queries += o.oracle_queries;
        hash_retrievals += o.hash_retrievals;
        table_lookups += o.table_lookups;
        symbols_hashed += o.symbols_hashed;
        preprocess_ops += o.preprocess_ops;
        return *this;
    }
    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// MaxAlign_k(A, B, i_B). Implementations must not mutate themselves in
/// query(); all bookkeeping goes to the caller's counters.
class MaxAlignOracle {
public:
    virtual ~MaxAlignOracle() = default;
    virtual std::int64_t query(std::int64_t i_b, OpCounters& counters) const = 0;
    virtual OracleGrade grade() const = 0;
};

/// Grade "correct" by exhaustive scan. Test reference only.
class BruteForceMaxAlign final : public MaxAlignOracle {
public:
    BruteForceMaxAlign(const ByteString& a, const ByteString& b, std::int64_t k)
        : a_(a), b_(b), k_(k) {}
    std::int64_t query(std::int64_t i_b, OpCounters& counters) const override;
    OracleGrade grade() const override { return OracleGrade::correct; }

private:
    const ByteString& a_;
    const ByteString& b_;
    std::int64_t k_;
};

struct MatchStep {
    std::int64_t i_b;
    std::int64_t d;
};

struct GreedyMatchResult {
    Verdict verdict = Verdict::large;
    std::int64_t iterations = 0;
    OpCounters counters;
    std::vector<MatchStep> trace;  // filled only when requested
};

/// Throws std::invalid_argument for k < 1 or |A| != |B|.
GreedyMatchResult greedy_match(const ByteString& a, const ByteString& b, std::int64_t k,
                               const MaxAlignOracle& oracle, bool record_trace = false);

/// Edit count of the greedy cover, rebuilt from a SMALL trace. Each step's
/// B-piece is paired with an A-piece whose start sits at the best shift in
/// [-3k, 3k]; the pieces partition both strings, so `bound` is an upper
/// bound on ED(A, B).
struct MatchCertificate {
    std::int64_t bound = 0;
    std::int64_t budget = 0;  // 2k+1 + 3k(2k+1) + 6k(2k+2)
    bool within_budget = false;
};

MatchCertificate certify_small(const ByteString& a, const ByteString& b, std::int64_t k,
                               const std::vector<MatchStep>& trace);

/// ceil(log2 n) for n >= 1 (0 for n == 1).
std::int64_t ceil_log2(std::int64_t n);
/// floor(log2 n) for n >= 1.
std::int64_t floor_log2(std::int64_t n);

}  // namespace gapedit
