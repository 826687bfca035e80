#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <string>

#include "gapedit/alignment_oracles.hpp"
#include "gapedit/decomposition.hpp"
#include "gapedit/edit_distance.hpp"
#include "test_helpers.hpp"

using namespace gapedit;
using gapedit::testing::mutate;
using gapedit::testing::random_string;

namespace {

// Plain recursion over the three edit choices; only for very short strings.
std::int64_t ed_recursive(const std::string& a, const std::string& b) {
    std::function<std::int64_t(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> std::int64_t {
        if (i == a.size()) return static_cast<std::int64_t>(b.size() - j);
        if (j == b.size()) return static_cast<std::int64_t>(a.size() - i);
        if (a[i] == b[j]) return go(i + 1, j + 1);
        return 1 + std::min({go(i + 1, j + 1), go(i + 1, j), go(i, j + 1)});
    };
    return go(0, 0);
}

ByteString text(const char* s) { return ByteString::from_text(s); }

}  // namespace

TEST(ByteString, SentinelOutsideRange) {
    const ByteString a = text("ab");
    EXPECT_EQ(a.at(0), kSentinel);
    EXPECT_EQ(a.at(3), kSentinel);
    EXPECT_EQ(a.at(-100), kSentinel);
    EXPECT_EQ(a.at(1), 'a' + 1);
    EXPECT_EQ(a.size(), 2);
    EXPECT_EQ(a.to_text(), "ab");
}

TEST(ByteString, SliceFillsSentinels) {
    const auto s = text("abc").slice(0, 4);
    ASSERT_EQ(s.size(), 5u);
    EXPECT_EQ(s.front(), kSentinel);
    EXPECT_EQ(s.back(), kSentinel);
    EXPECT_TRUE(text("abc").slice(3, 2).empty());
}

TEST(ByteString, RejectsOutOfRangeSymbols) {
    EXPECT_THROW(ByteString(std::vector<Symbol>{0}), std::invalid_argument);
    EXPECT_THROW(ByteString(std::vector<Symbol>{258}), std::invalid_argument);
}

TEST(EditDistance, Examples) {
    EXPECT_EQ(edit_distance_exact(text(""), text("")), 0);
    EXPECT_EQ(edit_distance_exact(text("abc"), text("abc")), 0);
    EXPECT_EQ(ed_recursive("kitten", "sitting"), 3);
    EXPECT_EQ(edit_distance_exact(text("kitten"), text("sitting")), 3);
    EXPECT_EQ(edit_distance_exact(text(""), text("abcd")), 4);
}

TEST(EditDistance, AgreesWithRecursionOnShortStrings) {
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto n = std::uniform_int_distribution<int>(0, 7)(rng);
        const auto m = std::uniform_int_distribution<int>(0, 7)(rng);
        const ByteString a = random_string(n, 3, rng), b = random_string(m, 3, rng);
        const auto expected = ed_recursive(a.to_text(), b.to_text());
        EXPECT_EQ(edit_distance_exact(a, b), expected);
        EXPECT_EQ(edit_distance_quadratic(a.symbols(), b.symbols()), expected);
    }
}

TEST(EditDistance, BandedReportsOverflow) {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const ByteString a = random_string(40, 4, rng), b = random_string(40, 4, rng);
        const auto d = edit_distance_quadratic(a.symbols(), b.symbols());
        for (std::int64_t band : {0, 1, 5, 20, 40}) {
            EXPECT_EQ(edit_distance_banded(a.symbols(), b.symbols(), band), std::min(d, band + 1));
        }
    }
}

TEST(EditDistance, MetricOnSmallInstances) {
    Rng rng(5);
    for (int t = 0; t < 1000; ++t) {
        const ByteString a = random_string(std::uniform_int_distribution<int>(0, 32)(rng), 3, rng);
        const ByteString b = random_string(std::uniform_int_distribution<int>(0, 32)(rng), 3, rng);
        const ByteString c = random_string(std::uniform_int_distribution<int>(0, 32)(rng), 3, rng);
        const auto ab = edit_distance_exact(a, b), ba = edit_distance_exact(b, a);
        EXPECT_EQ(ab, ba);
        EXPECT_LE(ab, edit_distance_exact(a, c) + edit_distance_exact(c, b));
    }
}

TEST(ExactHwave, Examples) {
    EXPECT_TRUE(exact_hwave(text("abcdef"), text("abcdef"), 0));
    EXPECT_TRUE(exact_hwave(text("abc"), text("abd"), 1));
    EXPECT_FALSE(exact_hwave(text("abcd"), text("dcba"), 1));
    EXPECT_THROW(exact_hwave(text("a"), text("a"), -1), std::invalid_argument);
}

TEST(ExactHwave, MatchesDynamicProgramming) {
    Rng rng(17);
    for (int t = 0; t < 400; ++t) {
        const auto n = std::uniform_int_distribution<int>(1, 64)(rng);
        const ByteString a = random_string(n, 2 + t % 3, rng);
        const ByteString b = gapedit::testing::mutate_same_length(a, t % 12, 2 + t % 3, rng);
        const auto ed = edit_distance_quadratic(a.symbols(), b.symbols());
        for (std::int64_t k = 0; k <= n; ++k) {
            ASSERT_EQ(exact_hwave(a, b, k), ed <= k) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Hamming, CountsMismatches) {
    EXPECT_EQ(hamming(text("abc"), text("abc"), 1, 3), 0);
    EXPECT_EQ(hamming(text("abc"), text("abd"), 1, 3), 1);
    EXPECT_EQ(hamming(text("abc"), text("abc"), 3, 5), 0);  // both read sentinels past the end
    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const ByteString a = random_string(30, 2, rng), b = random_string(30, 2, rng);
        std::int64_t expected = 0;
        const std::string sa = a.to_text(), sb = b.to_text();
        for (std::size_t p = 4; p < 20; ++p) {
            expected += sa[p] != sb[p] ? 1 : 0;
        }
        EXPECT_EQ(hamming(a, b, 5, 20), expected);
    }
}

TEST(EditScript, ExamplesAndReplay) {
    EXPECT_TRUE(optimal_edit_script(text("abc"), text("abc")).ops.empty());
    const auto one = optimal_edit_script(text("ab"), text("b"));
    ASSERT_EQ(one.ops.size(), 1u);
    EXPECT_EQ(one.ops[0].kind, EditKind::erase);

    Rng rng(23);
    for (int t = 0; t < 300; ++t) {
        const ByteString a = random_string(std::uniform_int_distribution<int>(0, 64)(rng), 4, rng);
        const ByteString b = mutate(a, t % 15, 4, rng);
        const auto script = optimal_edit_script(a, b);
        EXPECT_EQ(static_cast<std::int64_t>(script.ops.size()), edit_distance_quadratic(a.symbols(), b.symbols()));
        EXPECT_EQ(apply_edit_script(a, script), b);
    }
}

TEST(Decomposition, IdenticalStringsGiveOneMatchedPair) {
    const ByteString a = text("abcdef");
    const auto dec = decompose(a, a, 0);
    ASSERT_EQ(dec.intervals_a.size(), 1u);
    EXPECT_EQ(dec.intervals_a[0], (Interval{1, 7}));
    EXPECT_EQ(dec.intervals_b[0], (Interval{1, 7}));
    EXPECT_EQ(dec.matching[0], 0);
}

TEST(Decomposition, SingleSubstitution) {
    const ByteString a = text("abcdef"), b = text("abXdef");
    const auto dec = decompose(a, b, 1);
    ASSERT_EQ(dec.intervals_a.size(), 3u);
    EXPECT_EQ(dec.intervals_a[1], (Interval{3, 4}));
    EXPECT_EQ(dec.intervals_b[1], (Interval{3, 4}));
    EXPECT_EQ(dec.matching[1], Decomposition::kUnmatched);
    EXPECT_EQ(check_decomposition(a, b, 1, dec), "");
}

TEST(Decomposition, RejectsTooManyEdits) {
    EXPECT_THROW(decompose(text("abcd"), text("dcba"), 1), std::invalid_argument);
}

TEST(Decomposition, RandomScriptsSatisfyInvariants) {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        const ByteString a = random_string(std::uniform_int_distribution<int>(0, 80)(rng), 3, rng);
        const ByteString b = mutate(a, std::uniform_int_distribution<int>(0, 10)(rng), 3, rng);
        const auto k = edit_distance_exact(a, b) + t % 3;
        const auto dec = decompose(a, b, k);
        EXPECT_EQ(static_cast<std::int64_t>(dec.intervals_a.size()), 2 * k + 1);
        EXPECT_EQ(check_decomposition(a, b, k, dec), "");
    }
}

TEST(Decomposition, CheckerCatchesBrokenMatching) {
    const ByteString a = text("abcdef"), b = text("abXdef");
    auto dec = decompose(a, b, 1);
    dec.matching[1] = 1;
    EXPECT_NE(check_decomposition(a, b, 1, dec), "");
}

TEST(BruteForceAlignment, Examples) {
    const ByteString a = text("abcdefgh");
    EXPECT_EQ(max_k_alignment_bruteforce(a, a, 1, 2), 8);
    EXPECT_EQ(max_k_alignment_bruteforce(text("aaaa"), text("bbbb"), 1, 3), 0);
    EXPECT_EQ(max_k_alignment_bruteforce(text("xxabcde"), text("abcdezz"), 1, 2), 5);
    EXPECT_EQ(max_shift_alignment_bruteforce(a, a, 3, 3, 1), 6);
}

TEST(BruteForceAlignment, ZeroShiftIsLongestCommonExtension) {
    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        const ByteString a = random_string(24, 2, rng), b = random_string(24, 2, rng);
        const std::int64_t i = std::uniform_int_distribution<int>(1, 24)(rng);
        EXPECT_EQ(max_shift_alignment_bruteforce(a, b, i, i, 0), longest_common_extension(a, i, b, i));
    }
}

TEST(BruteForceAlignment, KAlignmentIsShiftAlignmentAroundIB) {
    Rng rng(43);
    for (int t = 0; t < 200; ++t) {
        const ByteString a = random_string(24, 2, rng), b = random_string(24, 2, rng);
        const std::int64_t i = std::uniform_int_distribution<int>(1, 24)(rng);
        const std::int64_t k = std::uniform_int_distribution<int>(0, 5)(rng);
        const auto d = max_k_alignment_bruteforce(a, b, i, k);
        EXPECT_EQ(d, max_shift_alignment_bruteforce(a, b, i, i, k));
        bool any_match = false;
        for (std::int64_t c = -k; c <= k; ++c) {
            any_match = any_match || a.at(i + c) == b.at(i);
        }
        EXPECT_EQ(d == 0, !any_match);
    }
}
