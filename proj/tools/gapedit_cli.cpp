#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapedit/gapedit.h"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Failure : std::runtime_error {
    Failure(gapedit_status s, const std::string& what) : std::runtime_error(what), status(s) {}
    gapedit_status status;
};

void check(gapedit_status s, const std::string& context) {
    if (s != GAPEDIT_OK) {
        throw Failure(s, context + ": " + gapedit_status_name(s) + ": " + gapedit_last_error());
    }
}

std::string take(char* text) {
    std::string s = text ? text : "";
    gapedit_free(text);
    return s;
}

struct StringDeleter {
    void operator()(gapedit_string* s) const { gapedit_string_free(s); }
};
struct IndexDeleter {
    void operator()(gapedit_index* i) const { gapedit_index_free(i); }
};
using StringPtr = std::unique_ptr<gapedit_string, StringDeleter>;
using IndexPtr = std::unique_ptr<gapedit_index, IndexDeleter>;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Trial 0 runs on the seed itself, so any record replays with its own seed
// and --trials 1.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) {
    return t == 0 ? seed : splitmix64(splitmix64(seed) + t);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GAPEDIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric GAPEDIT_SEED\n";
        }
    }
    return 0;
}

unsigned default_jobs() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

// Emits lines in submission order from a single thread.
class OrderedWriter {
public:
    OrderedWriter(std::ostream& out, std::size_t count) : out_(out), slots_(count), thread_([this] { run(); }) {}
    ~OrderedWriter() { finish(); }

    void put(std::size_t slot, std::string line) {
        {
            std::lock_guard lock(mu_);
            slots_[slot] = std::move(line);
        }
        cv_.notify_one();
    }

    void finish() {
        if (thread_.joinable()) {
            {
                std::lock_guard lock(mu_);
                closing_ = true;
            }
            cv_.notify_one();
            thread_.join();
        }
    }

private:
    void run() {
        std::size_t next = 0;
        std::unique_lock lock(mu_);
        while (next < slots_.size()) {
            cv_.wait(lock, [&] { return slots_[next].has_value() || closing_; });
            if (!slots_[next]) {
                break;
            }
            std::string line = std::move(*slots_[next]);
            ++next;
            lock.unlock();
            out_ << line << '\n';
            out_.flush();
            lock.lock();
        }
    }

    std::ostream& out_;
    std::vector<std::optional<std::string>> slots_;
    std::mutex mu_;
    std::condition_variable cv_;
    bool closing_ = false;
    std::thread thread_;
};

// Runs job(t) for t in [0, count) on up to `workers` threads. The first
// exception is rethrown after all workers stop.
template <class Job>
void run_pool(std::size_t count, unsigned workers, Job job) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < count;) {
            try {
                job(t);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    for (unsigned w = 1; w < n; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

const char* mode_name(gapedit_mode m) {
    switch (m) {
        case GAPEDIT_MODE_NOPREP:
            return "noprep";
        case GAPEDIT_MODE_ONE_SIDED:
            return "one-sided";
        case GAPEDIT_MODE_TWO_SIDED:
            return "two-sided";
    }
    return "?";
}

const std::map<std::string, gapedit_mode> kModes{
    {"noprep", GAPEDIT_MODE_NOPREP}, {"one-sided", GAPEDIT_MODE_ONE_SIDED}, {"two-sided", GAPEDIT_MODE_TWO_SIDED}};

json counters_json(const gapedit_result& r) {
    return {{"oracle_queries", r.oracle_queries}, {"hash_retrievals", r.hash_retrievals},
            {"table_lookups", r.table_lookups},   {"symbols_hashed", r.symbols_hashed},
            {"preprocess_ops", r.preprocess_ops}};
}

struct Pair {
    StringPtr a, b;
    std::optional<std::int64_t> exact_ed;
    std::string source;
};

Pair load_pair(const std::string& instance, const std::string& file_a, const std::string& file_b) {
    Pair p;
    gapedit_string* a = nullptr;
    gapedit_string* b = nullptr;
    if (!instance.empty()) {
        char* manifest = nullptr;
        check(gapedit_instance_load(instance.c_str(), &a, &b, &manifest), "loading instance " + instance);
        p.a.reset(a);
        p.b.reset(b);
        const json m = json::parse(take(manifest));
        if (m.contains("exact_ed") && m["exact_ed"].is_number_integer()) {
            p.exact_ed = m["exact_ed"].get<std::int64_t>();
        }
        p.source = instance;
        return p;
    }
    if (file_a.empty() || file_b.empty()) {
        throw Failure(GAPEDIT_ERR_INVALID_ARGUMENT, "need --instance or both --a and --b");
    }
    check(gapedit_string_load(file_a.c_str(), &a), "loading " + file_a);
    p.a.reset(a);
    check(gapedit_string_load(file_b.c_str(), &b), "loading " + file_b);
    p.b.reset(b);
    p.source = file_a + "," + file_b;
    return p;
}

void warn_regime(std::int64_t n, std::int64_t k) {
    if (static_cast<double>(k) * static_cast<double>(k) > static_cast<double>(n)) {
        std::cerr << "warning: k = " << k << " exceeds sqrt(n) = " << std::sqrt(static_cast<double>(n))
                  << "; the running-time guarantees assume k < sqrt(n)\n";
    }
}

// Loads the index at path when it exists, otherwise builds it and saves it there.
IndexPtr load_or_build(const std::string& path, gapedit_index_kind kind, const gapedit_string* a, std::int64_t k,
                       std::int64_t l, std::uint64_t seed, std::int64_t limit) {
    gapedit_index* idx = nullptr;
    if (std::filesystem::exists(path)) {
        check(gapedit_index_load(path.c_str(), &idx), "loading index " + path);
        IndexPtr owned(idx);
        gapedit_index_kind got{};
        check(gapedit_index_info(idx, &got, nullptr, nullptr, nullptr, nullptr), "index info");
        if (got != kind) {
            throw Failure(GAPEDIT_ERR_PRECONDITION, path + " holds a different index kind than this mode needs");
        }
        return owned;
    }
    check(gapedit_index_build(kind, a, k, l, seed, limit, &idx), "building index");
    IndexPtr owned(idx);
    check(gapedit_index_save(idx, path.c_str()), "saving index " + path);
    std::cerr << "built and saved " << path << '\n';
    return owned;
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::app);
            if (!file) {
                throw Failure(GAPEDIT_ERR_IO, "cannot open " + path + " for appending");
            }
            stream = &file;
        }
    }
};

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::int64_t n = 0, edits = 0, sigma = 4, k = 0, threshold = 0, period = 0;
    std::uint64_t seed = 0;
    std::string out;
    bool large_side = false, periodic = false, raw = false;
};

int cmd_gen(const GenArgs& g) {
    gapedit_gen_params p{};
    p.kind = g.large_side ? GAPEDIT_GEN_LARGE_SIDE : g.periodic ? GAPEDIT_GEN_PERIODIC : GAPEDIT_GEN_PLANTED;
    p.n = g.n;
    p.edits = g.edits;
    p.sigma = g.sigma;
    p.seed = g.seed;
    p.k = g.k;
    p.threshold = g.threshold;
    p.period = g.period;
    p.raw_edits = g.raw ? 1 : 0;
    char* manifest = nullptr;
    check(gapedit_gen(&p, g.out.c_str(), nullptr, nullptr, &manifest), "gen");
    std::cout << json::parse(take(manifest)).dump() << '\n';
    return 0;
}

// ---------------------------------------------------------------- exact

int cmd_exact(const std::string& instance, const std::string& fa, const std::string& fb) {
    const Pair p = load_pair(instance, fa, fb);
    const auto start = std::chrono::steady_clock::now();
    std::int64_t d = 0;
    check(gapedit_exact_ed(p.a.get(), p.b.get(), &d), "exact");
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json r{{"schema_version", kSchemaVersion},
           {"algorithm", "exact"},
           {"input", p.source},
           {"n", gapedit_string_length(p.a.get())},
           {"m", gapedit_string_length(p.b.get())},
           {"exact_ed", d},
           {"wall_time_s", wall}};
    std::cout << r.dump() << '\n';
    return 0;
}

// ---------------------------------------------------------------- gap / wave

struct RunArgs {
    std::string instance, file_a, file_b, mode = "noprep", index, out;
    std::int64_t k = 0, l = 0, limit = 0, trials = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

int cmd_run(const RunArgs& args, bool wave) {
    const Pair p = load_pair(args.instance, args.file_a, args.file_b);
    const gapedit_mode mode = kModes.at(args.mode);
    const std::int64_t n = gapedit_string_length(p.a.get());
    const std::int64_t l = wave ? (args.l > 0 ? args.l : args.k) : 0;
    warn_regime(n, args.k);

    IndexPtr index;
    if (!args.index.empty()) {
        if (mode == GAPEDIT_MODE_NOPREP) {
            std::cerr << "warning: --index is ignored in noprep mode\n";
        } else {
            const gapedit_index_kind kind = wave ? GAPEDIT_INDEX_ONE_SIDED_WAVE
                                            : mode == GAPEDIT_MODE_ONE_SIDED ? GAPEDIT_INDEX_ONE_SIDED_GAP
                                                                             : GAPEDIT_INDEX_TWO_SIDED;
            index = load_or_build(args.index, kind, p.a.get(), args.k, l, args.seed, args.limit);
        }
    }

    Output out(args.out);
    const auto trials = static_cast<std::size_t>(std::max<std::int64_t>(args.trials, 1));
    OrderedWriter writer(*out.stream, trials);
    run_pool(trials, args.jobs, [&](std::size_t t) {
        const std::uint64_t seed = trial_seed(args.seed, t);
        gapedit_result r{};
        if (wave) {
            check(gapedit_wave(mode, p.a.get(), p.b.get(), args.k, l, seed, index.get(), &r), "wave");
        } else {
            check(gapedit_gap(mode, p.a.get(), p.b.get(), args.k, seed, index.get(), args.limit, &r), "gap");
        }
        json rec{{"schema_version", kSchemaVersion},
                 {"algorithm", wave ? "greedy_wave" : "greedy_match"},
                 {"mode", args.mode},
                 {"input", p.source},
                 {"n", n},
                 {"k", args.k},
                 {"l", wave ? json(l) : json(nullptr)},
                 {"seed", seed},
                 {"trial", t},
                 {"verdict", r.verdict == GAPEDIT_SMALL ? "SMALL" : "LARGE"},
                 {"exact_ed", p.exact_ed ? json(*p.exact_ed) : json(nullptr)},
                 {"iterations", r.iterations},
                 {"sample_size", r.sample_size},
                 {"wall_time_s", r.wall_time_s},
                 {"counters", counters_json(r)},
                 {"index_file", index ? json(args.index) : json(nullptr)}};
        if (!wave && mode == GAPEDIT_MODE_TWO_SIDED && args.limit > 0) {
            rec["limit"] = args.limit;
        }
        writer.put(t, rec.dump());
    });
    writer.finish();
    return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::vector<std::string> algorithms{"noprep"};
    std::vector<std::int64_t> ns{4096}, ks{16}, ls;
    std::int64_t trials = 10, sigma = 4, edits = -1, limit = 0;
    std::uint64_t seed = 0;
    std::string csv, records;
    unsigned jobs = 1;
};

// Two-sided 97.5% Student t quantiles for df = 1..30; normal beyond.
double t_quantile(std::int64_t df) {
    static const double table[] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
                                   2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
                                   2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
    if (df < 1) {
        return 0.0;
    }
    return df <= 30 ? table[df - 1] : 1.960;
}

struct Stat {
    double mean = 0, half_width = 0;
};

Stat summarize(const std::vector<double>& xs) {
    Stat s;
    const auto n = static_cast<double>(xs.size());
    for (double x : xs) {
        s.mean += x / n;
    }
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) {
            ss += (x - s.mean) * (x - s.mean);
        }
        s.half_width = t_quantile(static_cast<std::int64_t>(xs.size()) - 1) * std::sqrt(ss / (n - 1) / n);
    }
    return s;
}

struct Cell {
    std::string algorithm;
    bool wave = false;
    gapedit_mode mode = GAPEDIT_MODE_NOPREP;
    std::int64_t n = 0, k = 0, l = 0;
};

int cmd_bench(const BenchArgs& args) {
    std::vector<Cell> cells;
    for (const std::string& algo : args.algorithms) {
        const bool wave = algo.rfind("wave-", 0) == 0;
        const std::string m = wave ? algo.substr(5) : algo;
        if (!kModes.count(m)) {
            throw Failure(GAPEDIT_ERR_INVALID_ARGUMENT, "unknown algorithm " + algo);
        }
        for (std::int64_t n : args.ns) {
            for (std::int64_t k : args.ks) {
                std::vector<std::int64_t> ls = wave ? (args.ls.empty() ? std::vector<std::int64_t>{k} : args.ls)
                                                    : std::vector<std::int64_t>{0};
                for (std::int64_t l : ls) {
                    cells.push_back({algo, wave, kModes.at(m), n, k, l});
                }
            }
        }
    }

    std::ofstream csv_file;
    std::ostream* csv = &std::cout;
    if (!args.csv.empty()) {
        csv_file.open(args.csv);
        if (!csv_file) {
            throw Failure(GAPEDIT_ERR_IO, "cannot open " + args.csv);
        }
        csv = &csv_file;
    }
    std::unique_ptr<Output> rec_out;
    if (!args.records.empty()) {
        rec_out = std::make_unique<Output>(args.records);
    }

    static const char* kMetrics[] = {"oracle_queries", "hash_retrievals", "table_lookups",
                                     "symbols_hashed", "preprocess_ops",  "wall_time_s"};
    *csv << "algorithm,n,k,l,trials,small_fraction";
    for (const char* m : kMetrics) {
        *csv << ',' << m << "_mean," << m << "_ci95";
    }
    *csv << '\n';

    const auto trials = static_cast<std::size_t>(std::max<std::int64_t>(args.trials, 1));
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Cell& cell = cells[c];
        warn_regime(cell.n, cell.k);
        std::vector<gapedit_result> results(trials);
        std::vector<std::string> lines(trials);
        try {
            run_pool(trials, args.jobs, [&](std::size_t t) {
                const std::uint64_t seed = trial_seed(args.seed, c * trials + t);
                gapedit_gen_params p{};
                p.kind = GAPEDIT_GEN_PLANTED;
                p.n = cell.n;
                p.edits = args.edits >= 0 ? std::min(args.edits, cell.n) : std::min(cell.k, cell.n);
                p.sigma = args.sigma;
                p.seed = seed;
                gapedit_string* a = nullptr;
                gapedit_string* b = nullptr;
                check(gapedit_gen(&p, nullptr, &a, &b, nullptr), "bench gen");
                StringPtr sa(a), sb(b);
                gapedit_result& r = results[t];
                if (cell.wave) {
                    check(gapedit_wave(cell.mode, a, b, cell.k, cell.l, seed, nullptr, &r), "bench wave");
                } else {
                    check(gapedit_gap(cell.mode, a, b, cell.k, seed, nullptr, args.limit, &r), "bench gap");
                }
                json rec{{"schema_version", kSchemaVersion},
                         {"algorithm", cell.wave ? "greedy_wave" : "greedy_match"},
                         {"mode", mode_name(cell.mode)},
                         {"input", "planted"},
                         {"n", cell.n},
                         {"k", cell.k},
                         {"l", cell.wave ? json(cell.l) : json(nullptr)},
                         {"seed", seed},
                         {"planted_edits", p.edits},
                         {"sigma", p.sigma},
                         {"verdict", r.verdict == GAPEDIT_SMALL ? "SMALL" : "LARGE"},
                         {"iterations", r.iterations},
                         {"sample_size", r.sample_size},
                         {"wall_time_s", r.wall_time_s},
                         {"counters", counters_json(r)},
                         {"index_file", nullptr}};
                lines[t] = rec.dump();
            });
        } catch (const Failure& e) {
            std::cerr << "warning: skipping " << cell.algorithm << " n=" << cell.n << " k=" << cell.k
                      << " l=" << cell.l << ": " << e.what() << '\n';
            continue;
        }
        if (rec_out) {
            for (const auto& line : lines) {
                *rec_out->stream << line << '\n';
            }
        }
        std::vector<std::vector<double>> cols(std::size(kMetrics));
        std::int64_t small = 0;
        for (const auto& r : results) {
            small += r.verdict == GAPEDIT_SMALL;
            const double v[] = {double(r.oracle_queries), double(r.hash_retrievals), double(r.table_lookups),
                                double(r.symbols_hashed), double(r.preprocess_ops),  r.wall_time_s};
            for (std::size_t m = 0; m < cols.size(); ++m) {
                cols[m].push_back(v[m]);
            }
        }
        *csv << cell.algorithm << ',' << cell.n << ',' << cell.k << ',' << cell.l << ',' << trials << ','
             << static_cast<double>(small) / static_cast<double>(trials);
        for (const auto& col : cols) {
            const Stat s = summarize(col);
            *csv << ',' << s.mean << ',' << s.half_width;
        }
        *csv << '\n';
        csv->flush();
    }
    return 0;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(std::uint64_t seed, const std::string& scratch) {
    int passed = 0;
    char* report = nullptr;
    check(gapedit_selftest(seed, scratch.empty() ? nullptr : scratch.c_str(), &passed, &report), "selftest");
    std::cout << take(report);
    return passed ? 0 : 1;
}

void add_input_flags(CLI::App* cmd, RunArgs& r) {
    cmd->add_option("--instance", r.instance, "Instance prefix written by gen (reads PREFIX.a, .b, .json)");
    cmd->add_option("--a", r.file_a, "Raw byte file for A");
    cmd->add_option("--b", r.file_b, "Raw byte file for B");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gapedit: gap edit distance tests"};
    app.require_subcommand(1);
    const std::uint64_t seed0 = default_seed();

    GenArgs gen;
    gen.seed = seed0;
    auto* c_gen = app.add_subcommand("gen", "Generate an instance (PREFIX.a, PREFIX.b, PREFIX.json)");
    c_gen->add_option("--n", gen.n, "String length")->required()->check(CLI::PositiveNumber);
    c_gen->add_option("--edits", gen.edits, "Planted edits")->check(CLI::NonNegativeNumber);
    c_gen->add_option("--sigma", gen.sigma, "Alphabet size")->check(CLI::Range(2, 256));
    c_gen->add_option("--seed", gen.seed, "Seed (default $GAPEDIT_SEED or 0)");
    c_gen->add_option("--out", gen.out, "Output prefix")->required();
    auto* f_large = c_gen->add_flag("--large-side", gen.large_side, "Pair with ED above --threshold");
    c_gen->add_option("--k", gen.k, "Gap parameter for --large-side")->check(CLI::PositiveNumber);
    c_gen->add_option("--threshold", gen.threshold, "ED must exceed this (default 40k^2)");
    auto* f_periodic = c_gen->add_flag("--periodic", gen.periodic, "B is a rotation of periodic A");
    c_gen->add_option("--period", gen.period, "Period for --periodic")->check(CLI::PositiveNumber);
    c_gen->add_flag("--raw", gen.raw, "Independent insert and delete counts");
    f_large->excludes(f_periodic);

    RunArgs ex;
    auto* c_exact = app.add_subcommand("exact", "Exact edit distance");
    add_input_flags(c_exact, ex);

    auto add_run = [&](const char* name, const char* help, RunArgs& r, bool wave) {
        r.seed = seed0;
        r.jobs = default_jobs();
        auto* cmd = app.add_subcommand(name, help);
        add_input_flags(cmd, r);
        cmd->add_option("--mode", r.mode, "noprep | one-sided | two-sided")
            ->check(CLI::IsMember({"noprep", "one-sided", "two-sided"}));
        cmd->add_option("--k", r.k, "Gap parameter")->required()->check(CLI::PositiveNumber);
        if (wave) {
            cmd->add_option("--l", r.l, "Wave resolution (default k)")->check(CLI::PositiveNumber);
        } else {
            cmd->add_option("--limit", r.limit, "Two-sided size cap (default 4096)")->check(CLI::PositiveNumber);
        }
        cmd->add_option("--index", r.index, "Index file: loaded if present, else built and saved");
        cmd->add_option("--trials", r.trials, "Independent trials")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", r.seed, "Seed (default $GAPEDIT_SEED or 0)");
        cmd->add_option("--jobs", r.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
        cmd->add_option("--out", r.out, "Append JSON lines here instead of stdout");
        return cmd;
    };
    RunArgs gap, wave;
    auto* c_gap = add_run("gap", "Gap test ED <= k vs ED > 40k^2", gap, false);
    auto* c_wave = add_run("wave", "Gap test ED <= k vs ED > 10kl", wave, true);

    BenchArgs bench;
    bench.seed = seed0;
    bench.jobs = default_jobs();
    auto* c_bench = app.add_subcommand("bench", "Grid of planted instances to a CSV of means and 95% intervals");
    c_bench->add_option("--algo", bench.algorithms,
                        "noprep, one-sided, two-sided, wave-noprep, wave-one-sided, wave-two-sided")
        ->delimiter(',');
    c_bench->add_option("--n", bench.ns, "String lengths")->delimiter(',')->check(CLI::PositiveNumber);
    c_bench->add_option("--k", bench.ks, "Gap parameters")->delimiter(',')->check(CLI::PositiveNumber);
    c_bench->add_option("--l", bench.ls, "Wave resolutions (default k)")->delimiter(',')->check(CLI::PositiveNumber);
    c_bench->add_option("--trials", bench.trials, "Trials per cell")->check(CLI::PositiveNumber);
    c_bench->add_option("--edits", bench.edits, "Planted edits per instance (default k)");
    c_bench->add_option("--sigma", bench.sigma, "Alphabet size")->check(CLI::Range(2, 256));
    c_bench->add_option("--limit", bench.limit, "Two-sided size cap")->check(CLI::PositiveNumber);
    c_bench->add_option("--seed", bench.seed, "Seed (default $GAPEDIT_SEED or 0)");
    c_bench->add_option("--jobs", bench.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    c_bench->add_option("--csv", bench.csv, "CSV output (default stdout)");
    c_bench->add_option("--records", bench.records, "Also append every RunRecord here");

    std::uint64_t st_seed = seed0;
    std::string st_scratch;
    auto* c_self = app.add_subcommand("selftest", "Reduced invariant and oracle-equivalence suite");
    c_self->add_option("--seed", st_seed, "Seed (default $GAPEDIT_SEED or 0)");
    c_self->add_option("--scratch", st_scratch, "Directory for temporary index files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_gen) {
            if (gen.large_side && gen.k < 1) {
                throw Failure(GAPEDIT_ERR_INVALID_ARGUMENT, "--large-side needs --k");
            }
            if (gen.periodic && gen.period < 1) {
                throw Failure(GAPEDIT_ERR_INVALID_ARGUMENT, "--periodic needs --period");
            }
            return cmd_gen(gen);
        }
        if (*c_exact) {
            return cmd_exact(ex.instance, ex.file_a, ex.file_b);
        }
        if (*c_gap) {
            return cmd_run(gap, false);
        }
        if (*c_wave) {
            return cmd_run(wave, true);
        }
        if (*c_bench) {
            return cmd_bench(bench);
        }
        if (*c_self) {
            return cmd_selftest(st_seed, st_scratch);
        }
    } catch (const Failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2 + static_cast<int>(e.status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
