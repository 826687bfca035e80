#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gapedit/byte_string.hpp"

namespace gapedit {

enum class Label : std::uint8_t { small_side, large_side, unlabeled };

std::string_view to_string(Label label);

struct Instance {
    ByteString a;
    ByteString b;
    std::int64_t sigma = 0;
    std::uint64_t seed = 0;
    std::int64_t planted_edits = 0;
    std::optional<std::int64_t> exact_ed;
    Label label = Label::unlabeled;
    std::optional<std::int64_t> threshold;  // the bound the label refers to
    std::string kind;                       // planted, large_side, periodic
    std::string certificate;                // how exact_ed / the label was established
};

/// Byte used for the c-th symbol of a sigma-letter alphabet: a-z, A-Z, 0-9
/// while sigma <= 62, raw byte values beyond that.
std::uint8_t alphabet_byte(std::int64_t c, std::int64_t sigma);

/// A uniform; B = A after e random edits. By default the edits are r
/// insert/delete pairs (r uniform in [0, e/2]) plus e - 2r substitutions, so
/// |B| = n. With raw_edits the insert and delete counts are independent and
/// B is trimmed or padded back to n afterwards; the length fix is counted
/// in planted_edits. exact_ed is always computed.
/// Throws std::invalid_argument unless 0 <= e <= n and 2 <= sigma <= 256.
Instance gen_planted(std::int64_t n, std::int64_t e, std::int64_t sigma, std::uint64_t seed,
                     bool raw_edits = false);

/// Independent A, B drawn with an increasing skew (A towards symbol 0, B
/// towards symbol 1) until a banded DP certifies ED > threshold. Throws
/// std::runtime_error after max_attempts rejections.
Instance gen_large_side(std::int64_t n, std::int64_t k, std::int64_t threshold, std::int64_t sigma,
                        std::uint64_t seed, int max_attempts = 16);

/// A repeats a random block of the given period; B is A rotated left by r
/// in [1, period] plus `edits` substitutions. planted_edits = 2r + edits.
Instance gen_periodic(std::int64_t n, std::int64_t period, std::int64_t sigma, std::uint64_t seed,
                      std::int64_t edits = 0);

/// Sets label = small_side and threshold when exact_ed <= threshold
/// (computing exact_ed if missing); otherwise leaves the label unchanged.
void label_small_side(Instance& inst, std::int64_t threshold);

std::string manifest_json(const Instance& inst);

/// Writes <prefix>.a, <prefix>.b and <prefix>.json.
void write_instance(const Instance& inst, const std::string& prefix);
/// Reads <prefix>.a and <prefix>.b, and the manifest when present.
Instance read_instance(const std::string& prefix);

ByteString read_string_file(const std::string& path);
void write_string_file(const ByteString& s, const std::string& path);

}  // namespace gapedit
