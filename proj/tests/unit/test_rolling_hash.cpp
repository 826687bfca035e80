#include <gtest/gtest.h>

#include <cmath>

#include "gapedit/rolling_hash.hpp"
#include "test_helpers.hpp"

using namespace gapedit;
using gapedit::testing::random_string;

namespace {

SamplePtr share(SampleSet s) { return std::make_shared<const SampleSet>(std::move(s)); }

// Hash of the sampled symbols inside [i, j] computed from scratch.
std::uint64_t direct_hash(const ByteString& a, const SampleSet& s, std::int64_t offset,
                          std::int64_t i, std::int64_t j, std::uint64_t x) {
    std::vector<Symbol> picked;
    for (std::int64_t p : s.indices) {
        if (p + offset >= i && p + offset <= j) {
            picked.push_back(a.at(p + offset));
        }
    }
    return hash_symbols(picked, x);
}

}  // namespace

TEST(ModularArithmetic, PowerCacheMatchesSquareAndMultiply) {
    const HashConfig cfg = HashConfig::from_seed(99);
    const auto ctx = make_hash_context(cfg, 1000);
    for (std::int64_t m = 0; m <= 1001; ++m) {
        ASSERT_EQ(ctx->power(m), powmod61(cfg.x, static_cast<std::uint64_t>(m)));
    }
}

TEST(ModularArithmetic, MulmodAgreesWithWideProduct) {
    Rng rng(1);
    std::uniform_int_distribution<std::uint64_t> dist(0, kMersenne61 - 1);
    for (int t = 0; t < 10000; ++t) {
        const std::uint64_t a = dist(rng), b = dist(rng);
        const auto expected = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kMersenne61);
        ASSERT_EQ(mulmod61(a, b), expected);
    }
}

TEST(HashConfig, SeedDeterminesX) {
    EXPECT_EQ(HashConfig::from_seed(5), HashConfig::from_seed(5));
    EXPECT_NE(HashConfig::from_seed(5).x, HashConfig::from_seed(6).x);
    EXPECT_LT(HashConfig::from_seed(5).x, kMersenne61);
}

TEST(DrawSample, GranularityOneIsEverything) {
    const auto s = draw_sample(50, 1, false, HashConfig::from_seed(3));
    EXPECT_EQ(s, [] { auto f = full_sample(50); f.granularity = 1; return f; }());
}

TEST(DrawSample, AnchorsPresent) {
    const auto s = draw_sample(1000, 37, true, HashConfig::from_seed(3));
    for (std::int64_t m = 37; m <= 1000; m += 37) {
        EXPECT_TRUE(s.contains(m));
    }
    EXPECT_TRUE(s.contains(999));
    EXPECT_TRUE(std::is_sorted(s.indices.begin(), s.indices.end()));
    EXPECT_EQ(std::adjacent_find(s.indices.begin(), s.indices.end()), s.indices.end());
}

TEST(DrawSample, SizeFollowsBinomial) {
    const std::int64_t n = 10000, k = 100;
    const double rate = 4.0 * std::log(static_cast<double>(n)) / static_cast<double>(k);
    const double mean = n * rate, sd = std::sqrt(n * rate * (1 - rate));
    int outside = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = draw_sample(n, k, false, HashConfig::from_seed(seed));
        outside += std::abs(static_cast<double>(s.size()) - mean) > 3 * sd ? 1 : 0;
    }
    // 3 sigma leaves about 0.3% per draw; allow two stragglers in 100.
    EXPECT_LE(outside, 2);
}

TEST(DrawSample, RejectsBadArguments) {
    EXPECT_THROW(draw_sample(0, 1, false, HashConfig{}), std::invalid_argument);
    EXPECT_THROW(draw_sample(10, 0, false, HashConfig{}), std::invalid_argument);
}

TEST(RollingHash, EmptySampleGivesSingleZero) {
    const auto ctx = make_hash_context(HashConfig::from_seed(1), 8);
    const auto h = init_rolling_hash(ByteString::from_text("abcdefgh"), ctx, share(SampleSet{}));
    ASSERT_EQ(h.prefixes().size(), 1u);
    EXPECT_EQ(h.prefixes()[0], 0u);
    EXPECT_EQ(h.retrieve(1, 8), 0u);
}

TEST(RollingHash, RetrievalMatchesDirectHash) {
    Rng rng(8);
    const HashConfig cfg = HashConfig::from_seed(8);
    for (int t = 0; t < 20; ++t) {
        const ByteString a = random_string(200, 4, rng);
        const auto ctx = make_hash_context(cfg, a.size());
        const auto s = share(draw_sample(a.size(), 1 + t % 7, t % 2 == 0, cfg));
        const std::int64_t offset = t % 5 - 2;
        const auto h = init_rolling_hash(a, ctx, s, offset);
        EXPECT_EQ(h.prefixes().size(), s->indices.size() + 1);
        for (int q = 0; q < 200; ++q) {
            const std::int64_t i = std::uniform_int_distribution<int>(-3, 205)(rng);
            const std::int64_t j = std::uniform_int_distribution<int>(static_cast<int>(i), 206)(rng);
            const auto v = h.retrieve(i, j);
            ASSERT_EQ(v, direct_hash(a, *s, offset, i, j, cfg.x));
            ASSERT_LT(v, kMersenne61);
        }
    }
}

TEST(RollingHash, DeterministicReplay) {
    Rng rng(9);
    const ByteString a = random_string(300, 5, rng);
    const HashConfig cfg = HashConfig::from_seed(77);
    auto build = [&] {
        const auto ctx = make_hash_context(cfg, a.size());
        return init_rolling_hash(a, ctx, share(draw_sample(a.size(), 10, true, cfg)), 3);
    };
    const auto h1 = build(), h2 = build();
    EXPECT_TRUE(std::equal(h1.prefixes().begin(), h1.prefixes().end(), h2.prefixes().begin(), h2.prefixes().end()));
}

TEST(RollingHash, CompletenessOnEqualSubstrings) {
    Rng rng(12);
    const HashConfig cfg = HashConfig::from_seed(12);
    const ByteString a = random_string(256, 2, rng);
    std::vector<Symbol> bs(a.symbols().begin(), a.symbols().end());
    for (std::size_t p = 100; p < 140; ++p) {
        bs[p] = bs[p] == 'a' + 1 ? 'b' + 1 : 'a' + 1;
    }
    const ByteString b(bs);
    const auto ctx = make_hash_context(cfg, 256);
    const auto s = share(draw_sample(256, 8, false, cfg));
    const auto ha = init_rolling_hash(a, ctx, s), hb = init_rolling_hash(b, ctx, s);
    for (int q = 0; q < 10000; ++q) {
        std::int64_t i = std::uniform_int_distribution<int>(1, 256)(rng);
        std::int64_t j = std::uniform_int_distribution<int>(1, 256)(rng);
        if (i > j) std::swap(i, j);
        if (a.slice(i, j) == b.slice(i, j)) {
            ASSERT_EQ(ha.retrieve(i, j), hb.retrieve(i, j));
        }
    }
}

TEST(RollingHash, ShiftConsistency) {
    // B[s] = A[s + c] for all s, so views (S + a) on A and (S - b) on B with
    // a + b = c read identical symbols.
    Rng rng(13);
    const HashConfig cfg = HashConfig::from_seed(13);
    const ByteString base = random_string(400, 4, rng);
    const std::int64_t c = 7;
    const ByteString a = base;
    const ByteString b(base.slice(1 + c, 400 + c));
    const auto ctx = make_hash_context(cfg, 400);
    const auto s = share(draw_sample(400, 5, true, cfg));
    for (std::int64_t av = -4; av <= 11; ++av) {
        const std::int64_t bv = c - av;
        const auto ha = init_rolling_hash(a, ctx, s, av);
        const auto hb = init_rolling_hash(b, ctx, s, -bv);
        for (std::int64_t lo = 20; lo < 300; lo += 37) {
            const std::int64_t hi = lo + 50;
            EXPECT_EQ(ha.retrieve(lo + av, hi + av), hb.retrieve(lo - bv, hi - bv));
        }
    }
}

TEST(HashSidecar, RoundTrip) {
    const HashConfig cfg = HashConfig::from_seed(21);
    const auto s = draw_sample(500, 9, true, cfg);
    HashConfig cfg2;
    SampleSet s2;
    parse_hash_sidecar_json(hash_sidecar_json(cfg, s), cfg2, s2);
    EXPECT_EQ(cfg, cfg2);
    EXPECT_EQ(s, s2);
    EXPECT_THROW(parse_hash_sidecar_json(R"({"p":5,"x":1,"rng_seed":0,"sample":{}})", cfg2, s2),
                 std::exception);
}
