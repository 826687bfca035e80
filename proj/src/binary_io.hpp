#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "gapedit/errors.hpp"

namespace gapedit::detail {

// Little-endian fixed-width encoding with an FNV-1a trailer over every
// preceding byte.

inline std::uint64_t fnv1a(const std::uint8_t* data, std::size_t size) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t t = 0; t < size; ++t) {
        h ^= data[t];
        h *= 0x100000001b3ULL;
    }
    return h;
}

class Writer {
public:
    void bytes(std::string_view s) { buf_.insert(buf_.end(), s.begin(), s.end()); }
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u64(std::uint64_t v) {
        for (int t = 0; t < 8; ++t) {
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * t)));
        }
    }
    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

    std::vector<std::uint8_t> finish() {
        const std::uint64_t sum = fnv1a(buf_.data(), buf_.size());
        u64(sum);
        return std::move(buf_);
    }

private:
    std::vector<std::uint8_t> buf_;
};

class Reader {
public:
    /// Verifies and strips the checksum trailer.
    Reader(const std::vector<std::uint8_t>& data, const char* what) : data_(data), what_(what) {
        if (data_.size() < 8) {
            fail("file too short");
        }
        end_ = data_.size() - 8;
        std::uint64_t stored = 0;
        for (int t = 0; t < 8; ++t) {
            stored |= static_cast<std::uint64_t>(data_[end_ + static_cast<std::size_t>(t)]) << (8 * t);
        }
        if (stored != fnv1a(data_.data(), end_)) {
            fail("checksum mismatch");
        }
    }

    void expect(std::string_view magic) {
        need(magic.size());
        if (std::memcmp(data_.data() + pos_, magic.data(), magic.size()) != 0) {
            fail("bad magic bytes");
        }
        pos_ += magic.size();
    }
    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int t = 0; t < 8; ++t) {
            v |= static_cast<std::uint64_t>(data_[pos_ + static_cast<std::size_t>(t)]) << (8 * t);
        }
        pos_ += 8;
        return v;
    }
    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }

    std::size_t remaining() const { return end_ - pos_; }
    void done() const {
        if (pos_ != end_) {
            fail("trailing bytes");
        }
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw FormatError(std::string(what_) + ": " + why);
    }

private:
    void need(std::size_t count) const {
        if (end_ - pos_ < count) {
            fail("truncated");
        }
    }

    const std::vector<std::uint8_t>& data_;
    const char* what_;
    std::size_t pos_ = 0;
    std::size_t end_ = 0;
};

inline std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("cannot read " + path);
    }
    return data;
}

inline void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw IoError("cannot write " + path);
    }
}

}  // namespace gapedit::detail
