#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gapedit {

/// Symbols live in [1, 256] (byte value + 1). Reads outside the string
/// return kSentinel, which compares unequal to every real symbol.
using Symbol = std::uint16_t;

inline constexpr Symbol kAlphabetSize = 256;
inline constexpr Symbol kSentinel = kAlphabetSize + 1;

/// 1-based, sentinel-extended string over the byte alphabet.
class ByteString {
public:
    ByteString() = default;
    explicit ByteString(std::vector<Symbol> symbols);

    static ByteString from_bytes(std::span<const std::uint8_t> bytes);
    static ByteString from_text(std::string_view text);

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(symbols_.size()); }
    bool empty() const noexcept { return symbols_.empty(); }

    /// Symbol at 1-based position i; kSentinel when i is outside [1, size()].
    Symbol at(std::int64_t i) const noexcept {
        return (i >= 1 && i <= size()) ? symbols_[static_cast<std::size_t>(i - 1)] : kSentinel;
    }
    Symbol operator[](std::int64_t i) const noexcept { return at(i); }

    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// Copy of positions [i, j] with out-of-range positions filled by kSentinel.
    /// Empty when j < i.
    std::vector<Symbol> slice(std::int64_t i, std::int64_t j) const;

    /// Inverse of from_bytes. Throws if the string holds sentinel symbols.
    std::vector<std::uint8_t> to_bytes() const;
    std::string to_text() const;

    friend bool operator==(const ByteString&, const ByteString&) = default;

private:
    std::vector<Symbol> symbols_;
};

/// Number of p in [i, j] with A[p] != B[p], sentinel-extended.
std::int64_t hamming(const ByteString& a, const ByteString& b, std::int64_t i, std::int64_t j);

/// Longest d with A[ia, ia+d-1] == B[ib, ib+d-1], never matching sentinels.
std::int64_t longest_common_extension(const ByteString& a, std::int64_t ia,
                                      const ByteString& b, std::int64_t ib);

}  // namespace gapedit
