#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapedit/byte_string.hpp"

namespace gapedit {

/// Half-open 1-based range [start, end). Empty when start == end.
struct Interval {
    std::int64_t start = 1;
    std::int64_t end = 1;

    std::int64_t length() const noexcept { return end - start; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Partition of A and B into the same number of intervals with a partial
/// monotone matching. matching[i] is the B-interval matched to A-interval i,
/// or kUnmatched.
struct Decomposition {
    static constexpr std::int64_t kUnmatched = -1;

    std::vector<Interval> intervals_a;
    std::vector<Interval> intervals_b;
    std::vector<std::int64_t> matching;
};

/// Builds a decomposition with exactly 2k+1 intervals per string by
/// replaying an optimal edit script one edit at a time, splitting the
/// interval each edit lands in. Throws std::invalid_argument if ED(A, B) > k.
Decomposition decompose(const ByteString& a, const ByteString& b, std::int64_t k);

/// Empty string when every invariant holds, otherwise a description of the
/// first violation.
std::string check_decomposition(const ByteString& a, const ByteString& b, std::int64_t k,
                                const Decomposition& dec);

}  // namespace gapedit
