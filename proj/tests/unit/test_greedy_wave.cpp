#include <gtest/gtest.h>

#include "gapedit/alignment_oracles.hpp"
#include "gapedit/edit_distance.hpp"
#include "gapedit/greedy_wave.hpp"
#include "test_helpers.hpp"

using namespace gapedit;
using gapedit::testing::mutate_same_length;
using gapedit::testing::random_string;

TEST(Wave, RoundToMultiple) {
    EXPECT_EQ(round_to_multiple(0, 4), 0);
    EXPECT_EQ(round_to_multiple(2, 4), 0);  // tie goes down
    EXPECT_EQ(round_to_multiple(3, 4), 4);
    EXPECT_EQ(round_to_multiple(-2, 4), -4);
    EXPECT_EQ(round_to_multiple(-1, 4), 0);
    EXPECT_EQ(round_to_multiple(9, 3), 9);
}

TEST(Wave, NegativeInfinityIsAbsorbing) {
    EXPECT_EQ(wave_add(kNegInf, 100), kNegInf);
    EXPECT_EQ(wave_add(5, 3), 8);
}

TEST(Wave, Initialization) {
    Rng rng(1);
    const ByteString a = random_string(40, 2, rng), b = random_string(40, 2, rng);
    BruteForceShiftAlign oracle(a, b, 2);
    const auto r = greedy_wave(a, b, 6, 2, oracle);
    EXPECT_EQ(r.table.at(0, 0), 0);
    for (std::int64_t j = -6; j <= 6; j += 2) {
        if (j != 0) EXPECT_EQ(r.table.at(0, j), kNegInf);
    }
}

TEST(Wave, RejectsBadParameters) {
    const ByteString a = ByteString::from_text("abcd");
    LceShiftAlign oracle(a, a);
    EXPECT_THROW(greedy_wave(a, a, 2, 3, oracle), std::invalid_argument);
    EXPECT_THROW(greedy_wave(a, a, 2, 0, oracle), std::invalid_argument);
    EXPECT_THROW(validate_wave_parameters(100, 16, 2, WaveMode::noprep), std::invalid_argument);
    EXPECT_NO_THROW(validate_wave_parameters(100, 16, 4, WaveMode::noprep));
    EXPECT_THROW(validate_wave_parameters(10, 16, 4, WaveMode::one_sided), std::invalid_argument);
}

TEST(Wave, IdenticalStringsAllModes) {
    Rng rng(2);
    const ByteString a = random_string(1024, 4, rng);
    for (auto mode : {WaveMode::noprep, WaveMode::one_sided, WaveMode::two_sided}) {
        EXPECT_EQ(gap_wave(a, a, 16, 4, mode, 3).result.verdict, Verdict::small);
        EXPECT_EQ(gap_wave(a, a, 16, 16, mode, 3).result.verdict, Verdict::small);
    }
}

TEST(Wave, JumpPropertyAndMonotonicity) {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const std::int64_t n = 128 + 8 * t, k = 8 + t % 9, l = 1 + t % 4;
        const ByteString a = random_string(n, 2 + t % 3, rng);
        const ByteString b = mutate_same_length(a, t % 10, 2 + t % 3, rng);
        BruteForceShiftAlign oracle(a, b, l);
        const auto r = greedy_wave(a, b, k, l, oracle);
        EXPECT_EQ(count_jump_violations(r.table), 0);
        for (std::int64_t i = 1; i <= k; ++i) {
            for (std::int64_t c = 0; c < r.table.columns(); ++c) {
                const auto j = (c - r.table.m) * l;
                if (r.table.at(i - 1, j) != kNegInf) {
                    EXPECT_GE(r.table.at(i, j), r.table.at(i - 1, j));
                }
            }
        }
        EXPECT_LE(r.counters.oracle_queries, (k + 1) * (2 * k / l + 1));
    }
}

TEST(Wave, JumpCheckerFindsBrokenTable) {
    Rng rng(4);
    const ByteString a = random_string(64, 2, rng);
    LceShiftAlign oracle(a, a);
    auto r = greedy_wave(a, a, 4, 2, oracle);
    r.table.h[r.table.slot(3, 0)] = 1;
    EXPECT_GT(count_jump_violations(r.table), 0);
}

TEST(Wave, ExactLceConsistency) {
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        const std::int64_t n = 256, k = 8 + t % 24;
        const ByteString a = random_string(n, 4, rng);
        const ByteString b = mutate_same_length(a, t % 2 == 0 ? k / (20 * ceil_log2(n)) : 3 * k, 4, rng);
        LceShiftAlign oracle(a, b);
        const auto r = greedy_wave(a, b, k, 1, oracle);
        const auto ed = edit_distance_exact(a, b);
        if (ed <= k / (20 * ceil_log2(n))) {
            EXPECT_EQ(r.verdict, Verdict::small);
        }
        if (r.verdict == Verdict::small) {
            EXPECT_LE(ed, 10 * k);
            const auto cert = certify_wave(a, b, r.table);
            EXPECT_GE(cert.bound, ed);
            EXPECT_TRUE(cert.within_budget);
        }
    }
}

TEST(Wave, CertificateWithShiftOracle) {
    Rng rng(6);
    for (int t = 0; t < 30; ++t) {
        const std::int64_t n = 300, k = 12, l = 3;
        const ByteString a = random_string(n, 4, rng);
        const ByteString b = mutate_same_length(a, t % 8, 4, rng);
        BruteForceShiftAlign oracle(a, b, l);
        const auto r = greedy_wave(a, b, k, l, oracle);
        if (r.verdict == Verdict::small) {
            const auto cert = certify_wave(a, b, r.table);
            EXPECT_GE(cert.bound, edit_distance_exact(a, b));
        }
    }
}

TEST(Wave, NoPrepFamilies) {
    Rng rng(7);
    const ByteString a = random_string(200, 4, rng);
    const HashConfig cfg = HashConfig::from_seed(7);
    const auto ctx = make_hash_context(cfg, a.size());
    const auto sample = std::make_shared<const SampleSet>(draw_sample(a.size(), 2, false, cfg));
    for (std::int64_t k : {1, 4, 10}) {
        EXPECT_EQ(process_a_wave(a, 1, k, ctx, sample).size(), 4 * ceil_sqrt(k) + 1);
    }
}

TEST(Wave, NoPrepShiftAlignNeverUndershoots) {
    Rng rng(8);
    for (int t = 0; t < 6; ++t) {
        const std::int64_t n = 512, k = 16, l = 4;
        const ByteString a = random_string(n, 2, rng);
        const ByteString b = mutate_same_length(a, 8, 2, rng);
        const HashConfig cfg = HashConfig::from_seed(80 + t);
        const auto ctx = make_hash_context(cfg, n);
        const auto sample = std::make_shared<const SampleSet>(draw_sample(n, l, false, cfg));
        const auto fa = process_a_wave(a, l, k, ctx, sample);
        const auto fb = process_b(b, k, ctx, sample);
        for (std::int64_t i_b = 1; i_b <= n; i_b += 3) {
            const std::int64_t i_a = std::clamp<std::int64_t>(i_b + (i_b % 33) - 16, 1, n);
            OpCounters c;
            const auto d = max_shift_align_noprep(fa, fb, i_a, i_b, k, l, n, c);
            ASSERT_GE(d, max_shift_alignment_bruteforce(a, b, i_a, i_b, l));
            ASSERT_GE(d, std::min(2 * l, n - i_b + 1));
        }
    }
}

TEST(Wave, IndexGeometry) {
    Rng rng(9);
    const auto idx = one_sided_preprocess_wave(random_string(16, 3, rng), 4, 4, HashConfig::from_seed(9));
    EXPECT_EQ(idx.shift_column_min(), -2);
    EXPECT_EQ(idx.shift_columns(), 5);
    EXPECT_EQ(idx.max_shift(), 8);
}

TEST(Wave, IndexedShiftAlignHalfCorrect) {
    Rng rng(10);
    for (int t = 0; t < 4; ++t) {
        const std::int64_t n = 512, k = 16, l = 4;
        const ByteString a = random_string(n, 2, rng);
        const ByteString b = mutate_same_length(a, 8, 2, rng);
        const auto idx = one_sided_preprocess_wave(a, l, k, HashConfig::from_seed(90 + t));
        const auto hb = one_sided_process_b(idx, b);
        for (std::int64_t i_b = 1; i_b <= n; i_b += 2) {
            const std::int64_t i_a = std::clamp<std::int64_t>(i_b + (i_b % 33) - 16, 1, n);
            OpCounters c;
            const auto d = one_sided_max_shift_align(idx, hb, i_a, i_b, c);
            const auto truth = max_shift_alignment_bruteforce(a, b, i_a, i_b, l);
            if (truth > 0) {
                ASSERT_GT(2 * d, truth) << i_a << " " << i_b;
            }
        }
    }
}

TEST(Wave, IndexedRunMatchesDirectRun) {
    Rng rng(11);
    const ByteString a = random_string(600, 4, rng);
    const ByteString b = mutate_same_length(a, 2, 4, rng);
    const auto direct = gap_wave(a, b, 16, 4, WaveMode::one_sided, 12);
    const auto idx = one_sided_preprocess_wave(a, 4, 16, HashConfig::from_seed(12));
    const auto indexed = gap_wave_indexed(idx, a, b, WaveMode::one_sided);
    EXPECT_EQ(direct.result.verdict, indexed.result.verdict);
    EXPECT_EQ(direct.result.counters, indexed.result.counters);
    EXPECT_EQ(direct.result.table.h, indexed.result.table.h);
}
