#include <gtest/gtest.h>

#include <filesystem>

#include "gapedit/edit_distance.hpp"
#include "gapedit/instance_gen.hpp"

using namespace gapedit;

TEST(InstanceGen, ZeroEditsGiveEqualStrings) {
    const auto inst = gen_planted(100, 0, 4, 1);
    EXPECT_EQ(inst.a, inst.b);
    EXPECT_EQ(inst.exact_ed, 0);
}

TEST(InstanceGen, PlantedBoundHolds) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::int64_t e = static_cast<std::int64_t>(seed % 20);
        const auto inst = gen_planted(64, e, 2 + static_cast<std::int64_t>(seed % 5), seed);
        ASSERT_EQ(inst.a.size(), 64);
        ASSERT_EQ(inst.b.size(), 64);
        ASSERT_TRUE(inst.exact_ed.has_value());
        ASSERT_LE(*inst.exact_ed, inst.planted_edits);
        ASSERT_EQ(*inst.exact_ed, edit_distance_quadratic(inst.a.symbols(), inst.b.symbols()));
    }
}

TEST(InstanceGen, RawEditsKeepLength) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto inst = gen_planted(80, 12, 4, seed, true);
        ASSERT_EQ(inst.b.size(), 80);
        ASSERT_LE(*inst.exact_ed, inst.planted_edits);
    }
}

TEST(InstanceGen, Alphabet) {
    const auto inst = gen_planted(200, 0, 62, 3);
    for (auto byte : inst.a.to_bytes()) {
        EXPECT_TRUE(std::isalnum(byte));
    }
    EXPECT_EQ(alphabet_byte(0, 4), 'a');
    EXPECT_EQ(alphabet_byte(200, 256), 200);
}

TEST(InstanceGen, RejectsInfeasible) {
    EXPECT_THROW(gen_planted(10, 11, 4, 1), std::invalid_argument);
    EXPECT_THROW(gen_planted(10, 1, 1, 1), std::invalid_argument);
    EXPECT_THROW(gen_planted(10, 1, 257, 1), std::invalid_argument);
    EXPECT_THROW(gen_large_side(10, 2, 10, 2, 1), std::invalid_argument);
    EXPECT_THROW(gen_periodic(10, 11, 2, 1), std::invalid_argument);
}

TEST(InstanceGen, LargeSideCertified) {
    const auto inst = gen_large_side(4096, 8, 2560, 2, 5);
    EXPECT_EQ(inst.label, Label::large_side);
    ASSERT_TRUE(inst.exact_ed.has_value());
    EXPECT_GT(*inst.exact_ed, 2560);
    EXPECT_FALSE(inst.certificate.empty());
    const auto again = gen_large_side(4096, 8, 2560, 2, 5);
    EXPECT_EQ(again.a, inst.a);
    EXPECT_EQ(again.b, inst.b);
}

TEST(InstanceGen, LargeSideGivesUpAfterBoundedAttempts) {
    EXPECT_THROW(gen_large_side(64, 2, 63, 2, 1, 1), std::runtime_error);
}

TEST(InstanceGen, Periodic) {
    const auto flat = gen_periodic(50, 1, 4, 2);
    const auto bytes = flat.a.to_bytes();
    EXPECT_TRUE(std::all_of(bytes.begin(), bytes.end(), [&](auto c) { return c == bytes[0]; }));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::int64_t period = 1 + static_cast<std::int64_t>(seed % 9);
        const auto inst = gen_periodic(120, period, 3, seed);
        EXPECT_LE(*inst.exact_ed, 2 * period);
    }
}

TEST(InstanceGen, LabelSmallSide) {
    auto inst = gen_planted(200, 3, 4, 9);
    label_small_side(inst, 3);
    EXPECT_EQ(inst.label, Label::small_side);
    auto other = gen_large_side(200, 2, 100, 4, 9);
    label_small_side(other, 3);
    EXPECT_EQ(other.label, Label::large_side);
}

TEST(InstanceGen, FilesRoundTrip) {
    const auto inst = gen_planted(300, 7, 26, 11);
    const auto prefix = (std::filesystem::temp_directory_path() / "gapedit_inst").string();
    write_instance(inst, prefix);
    const auto back = read_instance(prefix);
    EXPECT_EQ(back.a, inst.a);
    EXPECT_EQ(back.b, inst.b);
    EXPECT_EQ(back.exact_ed, inst.exact_ed);
    EXPECT_EQ(back.planted_edits, inst.planted_edits);
    EXPECT_EQ(back.seed, inst.seed);
    EXPECT_EQ(back.sigma, 26);
    for (const char* ext : {".a", ".b", ".json"}) {
        std::filesystem::remove(prefix + ext);
    }
}

TEST(InstanceGen, SameSeedSameBytes) {
    const auto x = gen_planted(500, 20, 4, 42), y = gen_planted(500, 20, 4, 42);
    EXPECT_EQ(x.a, y.a);
    EXPECT_EQ(x.b, y.b);
    EXPECT_EQ(manifest_json(x), manifest_json(y));
}
