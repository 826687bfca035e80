#include "gapedit/alignment_oracles.hpp"

#include <algorithm>

#include "gapedit/edit_distance.hpp"

namespace gapedit {

namespace {

// Deliberately naive: compares symbol by symbol instead of reusing
// longest_common_extension, so the oracle shares no code with the
// algorithms it checks.
std::int64_t naive_match_length(const ByteString& a, std::int64_t ia, const ByteString& b,
                                std::int64_t ib) {
    std::int64_t d = 0;
    while (ia + d >= 1 && ia + d <= a.size() && ib + d >= 1 && ib + d <= b.size() &&
           a.at(ia + d) == b.at(ib + d)) {
        ++d;
    }
    return d;
}

}  // namespace

std::int64_t max_k_alignment_bruteforce(const ByteString& a, const ByteString& b,
                                        std::int64_t i_b, std::int64_t k) {
    std::int64_t best = 0;
    for (std::int64_t i_a = i_b - k; i_a <= i_b + k; ++i_a) {
        best = std::max(best, naive_match_length(a, i_a, b, i_b));
    }
    return best;
}

std::int64_t max_shift_alignment_bruteforce(const ByteString& a, const ByteString& b,
                                            std::int64_t i_a, std::int64_t i_b, std::int64_t l) {
    std::int64_t best = 0;
    for (std::int64_t i = i_a - l; i <= i_a + l; ++i) {
        best = std::max(best, naive_match_length(a, i, b, i_b));
    }
    return best;
}

bool aligned_within(const ByteString& a, const ByteString& b, std::int64_t i_a,
                    std::int64_t i_b, std::int64_t d, std::int64_t max_ed) {
    if (d <= max_ed) {
        return max_ed >= 0;
    }
    const auto sa = a.slice(i_a, i_a + d - 1);
    const auto sb = b.slice(i_b, i_b + d - 1);
    return edit_distance_at_most(sa, sb, max_ed);
}

bool has_approximate_alignment(const ByteString& a, const ByteString& b, std::int64_t i_b,
                               std::int64_t d, std::int64_t max_shift, std::int64_t max_ed) {
    if (d <= max_ed) {
        return max_ed >= 0;
    }
    const auto sb = b.slice(i_b, i_b + d - 1);
    for (std::int64_t r = 0; r <= max_shift; ++r) {
        for (std::int64_t c : {r, -r}) {
            const auto sa = a.slice(i_b + c, i_b + d - 1 + c);
            if (edit_distance_at_most(sa, sb, max_ed)) {
                return true;
            }
            if (r == 0) {
                break;
            }
        }
    }
    return false;
}

}  // namespace gapedit
