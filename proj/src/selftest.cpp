#include "gapedit/selftest.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "gapedit/decomposition.hpp"
#include "gapedit/edit_distance.hpp"
#include "gapedit/errors.hpp"
#include "gapedit/greedy_wave.hpp"
#include "gapedit/instance_gen.hpp"
#include "gapedit/one_sided.hpp"
#include "gapedit/random.hpp"
#include "gapedit/two_sided.hpp"

namespace gapedit {

namespace fs = std::filesystem;

bool SelftestReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return !checks.empty();
}

std::string SelftestReport::to_text() const {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << '\n';
        failed += c.passed ? 0 : 1;
    }
    os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

namespace {

ByteString random_string(std::int64_t n, std::int64_t sigma, Rng& rng) {
    std::uniform_int_distribution<int> pick(1, static_cast<int>(sigma));
    std::vector<Symbol> s(static_cast<std::size_t>(n));
    for (auto& c : s) {
        c = static_cast<Symbol>(pick(rng));
    }
    return ByteString(std::move(s));
}

std::int64_t two_sided_mismatches(const ByteString& a, const ByteString& b, std::int64_t k,
                                  const HashConfig& cfg) {
    const TwoSidedIndex idx = two_sided_preprocess(a, k, cfg);
    const RollingHashState hb = two_sided_process_b(idx, b);
    const BruteForceMaxAlign truth(a, b, k);
    std::int64_t bad = 0;
    OpCounters c;
    for (std::int64_t i = 1; i <= a.size(); ++i) {
        bad += two_sided_max_align(idx, hb, i, c) != truth.query(i, c);
    }
    return bad;
}

class Runner {
public:
    explicit Runner(SelftestReport& report) : report_(report) {}

    void check(const std::string& name, const std::function<std::string()>& body) {
        SelftestCheck c{name, false, {}};
        try {
            const std::string failure = body();
            c.passed = failure.empty();
            c.detail = c.passed ? "ok" : failure;
        } catch (const std::exception& e) {
            c.detail = std::string("unexpected exception: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

private:
    SelftestReport& report_;
};

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, const std::string& scratch_dir) {
    SelftestReport report;
    Runner run(report);
    Rng rng = substream(seed, "selftest");

    run.check("edit distance: banded == quadratic, h-wave == threshold", [&]() -> std::string {
        for (int t = 0; t < 60; ++t) {
            const ByteString a = random_string(1 + t % 40, 2 + t % 3, rng);
            const ByteString b = random_string(1 + (t * 7) % 40, 2 + t % 3, rng);
            const std::int64_t d = edit_distance_quadratic(a.symbols(), b.symbols());
            if (edit_distance_exact(a, b) != d) {
                return "exact distance disagrees with the quadratic DP";
            }
            for (std::int64_t k = 0; k <= 8; ++k) {
                if (exact_hwave(a, b, k) != (d <= k)) {
                    return "h-wave disagrees with ED <= k";
                }
            }
        }
        return {};
    });

    run.check("decomposition invariants", [&]() -> std::string {
        for (std::uint64_t t = 0; t < 40; ++t) {
            const Instance inst = gen_planted(64, static_cast<std::int64_t>(t % 8), 4, child_seed(seed, t));
            const std::int64_t k = *inst.exact_ed;
            const Decomposition dec = decompose(inst.a, inst.b, k);
            if (auto err = check_decomposition(inst.a, inst.b, k, dec); !err.empty()) {
                return err;
            }
        }
        return {};
    });

    run.check("rolling hash equality == substring equality", [&]() -> std::string {
        const ByteString a = random_string(96, 2, rng);
        const HashConfig cfg = HashConfig::from_seed(seed);
        auto ctx = make_hash_context(cfg, a.size());
        auto full = std::make_shared<const SampleSet>(full_sample(a.size()));
        const RollingHashState h = init_rolling_hash(a, ctx, full);
        std::uniform_int_distribution<std::int64_t> pos(1, a.size());
        for (int t = 0; t < 5000; ++t) {
            const std::int64_t i = pos(rng), j = pos(rng);
            const std::int64_t len = std::min(a.size() - i, a.size() - j) + 1;
            const std::int64_t l = std::uniform_int_distribution<std::int64_t>(1, len)(rng);
            const bool same = a.slice(i, i + l - 1) == a.slice(j, j + l - 1);
            if ((h.retrieve(i, i + l - 1) == h.retrieve(j, j + l - 1)) != same) {
                return "hash equality differs from substring equality";
            }
        }
        return {};
    });

    run.check("two-sided MaxAlign == brute force", [&]() -> std::string {
        for (std::uint64_t t = 0; t < 6; ++t) {
            const Instance inst = gen_planted(128, 6, 4, child_seed(seed ^ 0x2, t));
            if (auto bad = two_sided_mismatches(inst.a, inst.b, 4, HashConfig::from_seed(inst.seed)); bad > 0) {
                return std::to_string(bad) + " mismatching queries";
            }
        }
        return {};
    });

    run.check("fault injection: forced x = 0 is caught by the oracle comparison", [&]() -> std::string {
        HashConfig forced = HashConfig::from_seed(seed);
        forced.x = 0;
        const Instance inst = gen_planted(128, 6, 4, child_seed(seed ^ 0x3, 0));
        const std::int64_t bad = two_sided_mismatches(inst.a, inst.b, 4, forced);
        return bad > 0 ? std::string{} : "degenerate evaluation point went unnoticed";
    });

    run.check("gap back-ends on small and large sides", [&]() -> std::string {
        const std::int64_t n = 256, k = 16;
        for (std::uint64_t t = 0; t < 4; ++t) {
            const std::uint64_t s = child_seed(seed ^ 0x4, t);
            const Instance small = gen_planted(n, k, 4, s);
            const Instance same = gen_planted(n, 0, 4, s);
            const Instance large = gen_large_side(n, 2, 40 * 2 * 2, 4, s);
            if (gap_noprep(small.a, small.b, k, s).result.verdict != Verdict::small) {
                return "noprep said LARGE on ED <= k";
            }
            const TwoSidedIndex two = two_sided_preprocess(small.a, k, HashConfig::from_seed(s));
            if (gap_two_sided(two, small.a, small.b).result.verdict != Verdict::small) {
                return "two-sided said LARGE on ED <= k";
            }
            const OneSidedIndex one = one_sided_preprocess(same.a, k, HashConfig::from_seed(s));
            if (gap_one_sided(one, same.a, same.b).result.verdict != Verdict::small) {
                return "one-sided said LARGE on identical strings";
            }
            if (gap_noprep(large.a, large.b, 2, s).result.verdict != Verdict::large) {
                return "noprep said SMALL on ED > 40k^2 (k = 2)";
            }
        }
        return {};
    });

    run.check("wave: jump property and verdicts", [&]() -> std::string {
        const std::int64_t n = 1024, k = 16, l = 4;
        for (std::uint64_t t = 0; t < 2; ++t) {
            const std::uint64_t s = child_seed(seed ^ 0x5, t);
            const Instance same = gen_planted(n, 0, 4, s);
            const Instance large = gen_large_side(n, k, 10 * k * l, 4, s);
            for (WaveMode mode : {WaveMode::noprep, WaveMode::one_sided}) {
                const WaveRun r = gap_wave(same.a, same.b, k, l, mode, s);
                if (r.result.verdict != Verdict::small) {
                    return "wave said LARGE on identical strings";
                }
                if (count_jump_violations(r.result.table) != 0) {
                    return "jump property violated";
                }
                if (gap_wave(large.a, large.b, k, l, mode, s).result.verdict != Verdict::large) {
                    return "wave said SMALL on ED > 10kl";
                }
            }
        }
        return {};
    });

    fs::path dir = scratch_dir.empty()
                       ? fs::temp_directory_path() / ("gapedit-selftest-" + std::to_string(splitmix64(seed)))
                       : fs::path(scratch_dir);
    fs::create_directories(dir);

    run.check("index files: round trip and corruption detection", [&]() -> std::string {
        const Instance inst = gen_planted(128, 4, 4, child_seed(seed ^ 0x6, 0));
        const HashConfig cfg = HashConfig::from_seed(inst.seed);
        const OneSidedIndex one = one_sided_preprocess(inst.a, 8, cfg);
        const TwoSidedIndex two = two_sided_preprocess(inst.a, 8, cfg);
        const fs::path p1 = dir / "one.idx", p2 = dir / "two.idx";
        one.save(p1.string());
        two.save(p2.string());
        if (OneSidedIndex::load(p1.string()).serialize() != one.serialize() ||
            TwoSidedIndex::load(p2.string()).serialize() != two.serialize()) {
            return "reloaded index differs";
        }
        for (const fs::path& p : {p1, p2}) {
            std::fstream f(p, std::ios::in | std::ios::out | std::ios::binary);
            const auto mid = static_cast<std::streamoff>(fs::file_size(p) / 2);
            f.seekg(mid);
            const char byte = static_cast<char>(f.get());
            f.seekp(mid);
            f.put(static_cast<char>(byte ^ 0x5a));
            f.close();
            try {
                if (p == p1) {
                    (void)OneSidedIndex::load(p.string());
                } else {
                    (void)TwoSidedIndex::load(p.string());
                }
                return "corrupted " + p.filename().string() + " loaded without error";
            } catch (const FormatError&) {
            }
        }
        return {};
    });

    std::error_code ec;
    if (scratch_dir.empty()) {
        fs::remove_all(dir, ec);
    } else {
        fs::remove(dir / "one.idx", ec);
        fs::remove(dir / "two.idx", ec);
    }
    return report;
}

}  // namespace gapedit
