#include "gapedit/greedy_match.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gapedit/alignment_oracles.hpp"
#include "gapedit/edit_distance.hpp"

namespace gapedit {

std::string_view to_string(Verdict v) {
    return v == Verdict::small ? "SMALL" : "LARGE";
}

std::int64_t ceil_log2(std::int64_t n) {
    if (n <= 1) {
        return 0;
    }
    return std::bit_width(static_cast<std::uint64_t>(n - 1));
}

std::int64_t floor_log2(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("floor_log2: n must be positive");
    }
    return std::bit_width(static_cast<std::uint64_t>(n)) - 1;
}

std::int64_t BruteForceMaxAlign::query(std::int64_t i_b, OpCounters& counters) const {
    ++counters.oracle_queries;
    return max_k_alignment_bruteforce(a_, b_, i_b, k_);
}

GreedyMatchResult greedy_match(const ByteString& a, const ByteString& b, std::int64_t k,
                               const MaxAlignOracle& oracle, bool record_trace) {
    if (k < 1) {
        throw std::invalid_argument("greedy_match: k must be at least 1");
    }
    if (a.size() != b.size()) {
        throw std::invalid_argument("greedy_match: |A| must equal |B|");
    }
    const std::int64_t n = a.size();
    GreedyMatchResult r;
    std::int64_t i_b = 1;
    if (i_b > n) {
        r.verdict = Verdict::small;
        return r;
    }
    for (std::int64_t e = 1; e <= 2 * k + 1; ++e) {
        const std::int64_t d = oracle.query(i_b, r.counters);
        ++r.iterations;
        if (record_trace) {
            r.trace.push_back({i_b, d});
        }
        i_b += std::max<std::int64_t>(d, 1);
        if (i_b > n) {
            r.verdict = Verdict::small;
            return r;
        }
    }
    r.verdict = Verdict::large;
    return r;
}

MatchCertificate certify_small(const ByteString& a, const ByteString& b, std::int64_t k,
                               const std::vector<MatchStep>& trace) {
    const std::int64_t n = b.size();
    MatchCertificate cert;
    cert.budget = 2 * k + 1 + 3 * k * (2 * k + 1) + 6 * k * (2 * k + 2);

    // A-side cut points: piece t of A is [cut[t], cut[t+1]).
    std::vector<std::int64_t> cut(trace.size() + 1);
    cut[0] = 1;
    for (std::size_t t = 1; t < trace.size(); ++t) {
        const std::int64_t start = trace[t].i_b;
        const std::int64_t len = std::min(std::max<std::int64_t>(trace[t].d, 1), n - start + 1);
        std::int64_t shift = 0;
        bool found = false;
        for (std::int64_t r = 0; r <= 3 * k && !found; ++r) {
            for (std::int64_t c : {r, -r}) {
                if (aligned_within(a, b, start + c, start, len, 3 * k)) {
                    shift = c;
                    found = true;
                    break;
                }
            }
        }
        cut[t] = std::clamp(start + shift, cut[t - 1], a.size() + 1);
    }
    cut.back() = a.size() + 1;
    if (trace.empty()) {
        cert.bound = edit_distance_exact(a, b);
    }
    for (std::size_t t = 0; t < trace.size(); ++t) {
        const std::int64_t bs = trace[t].i_b;
        const std::int64_t be = t + 1 < trace.size() ? trace[t + 1].i_b : n + 1;
        const auto pa = a.slice(cut[t], cut[t + 1] - 1);
        const auto pb = b.slice(bs, std::min(be, n + 1) - 1);
        cert.bound += edit_distance_exact(pa, pb);
    }
    cert.within_budget = cert.bound <= cert.budget && cert.budget <= 40 * k * k;
    return cert;
}

}  // namespace gapedit
