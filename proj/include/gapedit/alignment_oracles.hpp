#pragma once

#include <cstdint>

#include "gapedit/byte_string.hpp"

namespace gapedit {

// Brute-force references for the MaxAlign contracts. Quadratic per query;
// meant for tests and the acceptance harness only.

/// Largest d such that A[i_A, i_A+d-1] == B[i_B, i_B+d-1] for some
/// |i_A - i_B| <= k. Zero when no shift matches even one symbol.
std::int64_t max_k_alignment_bruteforce(const ByteString& a, const ByteString& b,
                                        std::int64_t i_b, std::int64_t k);

/// Largest d such that A[i, i+d-1] == B[i_B, i_B+d-1] for some |i - i_A| <= l.
std::int64_t max_shift_alignment_bruteforce(const ByteString& a, const ByteString& b,
                                            std::int64_t i_a, std::int64_t i_b, std::int64_t l);

/// True when some c in [-max_shift, max_shift] gives
/// ED(A[i_B+c, i_B+d-1+c], B[i_B, i_B+d-1]) <= max_ed, reading sentinels
/// outside the strings.
bool has_approximate_alignment(const ByteString& a, const ByteString& b, std::int64_t i_b,
                               std::int64_t d, std::int64_t max_shift, std::int64_t max_ed);

/// ED(A[i_A, i_A+d-1], B[i_B, i_B+d-1]) <= max_ed, sentinel-extended.
bool aligned_within(const ByteString& a, const ByteString& b, std::int64_t i_a,
                    std::int64_t i_b, std::int64_t d, std::int64_t max_ed);

}  // namespace gapedit
