#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gapedit/byte_string.hpp"

namespace gapedit {

// Exact edit distance oracles. These are the ground truth the sublinear
// algorithms are tested against, so they favour obviousness over speed,
// except for the banded variants which keep desk-scale checks fast.

/// Plain O(n*m) two-row dynamic program.
std::int64_t edit_distance_quadratic(std::span<const Symbol> a, std::span<const Symbol> b);

/// Ukkonen band |i - j| <= t. Returns the exact distance when it is <= t,
/// otherwise t + 1.
std::int64_t edit_distance_banded(std::span<const Symbol> a, std::span<const Symbol> b,
                                  std::int64_t t);

/// Exact distance via band doubling (t = 1, 2, 4, ...), O(n * ED).
std::int64_t edit_distance_exact(std::span<const Symbol> a, std::span<const Symbol> b);
std::int64_t edit_distance_exact(const ByteString& a, const ByteString& b);

inline bool edit_distance_at_most(std::span<const Symbol> a, std::span<const Symbol> b,
                                  std::int64_t t) {
    return t >= 0 && edit_distance_banded(a, b, t) <= t;
}

/// Furthest-reaching diagonal table ("h-wave"). True iff ED(A, B) <= k.
/// Throws std::invalid_argument for k < 0.
bool exact_hwave(const ByteString& a, const ByteString& b, std::int64_t k);

enum class EditKind : std::uint8_t { insert, erase, substitute };

struct EditOp {
    EditKind kind;
    std::int64_t position;  // 1-based, in the coordinates of the string being edited
    Symbol symbol = 0;      // unused for erase

    friend bool operator==(const EditOp&, const EditOp&) = default;
};

/// Ops are applied in order; positions refer to the string as it stands
/// when the op is applied. optimal_edit_script emits them right to left so
/// each position is also valid in the original source.
struct EditScript {
    std::vector<EditOp> ops;
};

EditScript optimal_edit_script(const ByteString& a, const ByteString& b);
ByteString apply_edit_script(const ByteString& source, const EditScript& script);

}  // namespace gapedit
