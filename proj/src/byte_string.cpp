#include "gapedit/byte_string.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapedit {

ByteString::ByteString(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (Symbol s : symbols_) {
        if (s < 1 || s > kSentinel) {
            throw std::invalid_argument("ByteString: symbol out of range [1, 257]");
        }
    }
}

ByteString ByteString::from_bytes(std::span<const std::uint8_t> bytes) {
    std::vector<Symbol> symbols(bytes.size());
    std::transform(bytes.begin(), bytes.end(), symbols.begin(),
                   [](std::uint8_t c) { return static_cast<Symbol>(c + 1); });
    ByteString out;
    out.symbols_ = std::move(symbols);
    return out;
}

ByteString ByteString::from_text(std::string_view text) {
    return from_bytes({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

std::vector<Symbol> ByteString::slice(std::int64_t i, std::int64_t j) const {
    std::vector<Symbol> out;
    if (j < i) {
        return out;
    }
    out.reserve(static_cast<std::size_t>(j - i + 1));
    for (std::int64_t p = i; p <= j; ++p) {
        out.push_back(at(p));
    }
    return out;
}

std::vector<std::uint8_t> ByteString::to_bytes() const {
    std::vector<std::uint8_t> out(symbols_.size());
    for (std::size_t t = 0; t < symbols_.size(); ++t) {
        if (symbols_[t] == kSentinel) {
            throw std::logic_error("ByteString::to_bytes: sentinel symbol has no byte value");
        }
        out[t] = static_cast<std::uint8_t>(symbols_[t] - 1);
    }
    return out;
}

std::string ByteString::to_text() const {
    auto bytes = to_bytes();
    return {bytes.begin(), bytes.end()};
}

std::int64_t hamming(const ByteString& a, const ByteString& b, std::int64_t i, std::int64_t j) {
    std::int64_t count = 0;
    for (std::int64_t p = i; p <= j; ++p) {
        count += a.at(p) != b.at(p) ? 1 : 0;
    }
    return count;
}

std::int64_t longest_common_extension(const ByteString& a, std::int64_t ia,
                                      const ByteString& b, std::int64_t ib) {
    std::int64_t d = 0;
    for (;;) {
        Symbol x = a.at(ia + d);
        if (x == kSentinel || x != b.at(ib + d)) {
            return d;
        }
        ++d;
    }
}

}  // namespace gapedit
