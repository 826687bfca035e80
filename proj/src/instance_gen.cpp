#include "gapedit/instance_gen.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "binary_io.hpp"
#include "gapedit/edit_distance.hpp"
#include "gapedit/errors.hpp"
#include "gapedit/random.hpp"

namespace gapedit {

namespace {

constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

void check_sigma(std::int64_t sigma) {
    if (sigma < 2 || sigma > 256) {
        throw std::invalid_argument("sigma must lie in [2, 256]");
    }
}

Symbol sym(std::int64_t c, std::int64_t sigma) {
    return static_cast<Symbol>(alphabet_byte(c, sigma) + 1);
}

std::vector<Symbol> random_symbols(std::int64_t n, std::int64_t sigma, Rng& rng) {
    std::uniform_int_distribution<std::int64_t> pick(0, sigma - 1);
    std::vector<Symbol> out(static_cast<std::size_t>(n));
    for (auto& s : out) {
        s = sym(pick(rng), sigma);
    }
    return out;
}

Symbol different_symbol(Symbol old, std::int64_t sigma, Rng& rng) {
    std::uniform_int_distribution<std::int64_t> pick(0, sigma - 2);
    Symbol s = sym(pick(rng), sigma);
    return s == old ? sym(sigma - 1, sigma) : s;
}

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

std::string_view to_string(Label label) {
    switch (label) {
        case Label::small_side:
            return "small_side";
        case Label::large_side:
            return "large_side";
        case Label::unlabeled:
            break;
    }
    return "unlabeled";
}

std::uint8_t alphabet_byte(std::int64_t c, std::int64_t sigma) {
    if (sigma <= static_cast<std::int64_t>(kLetters.size())) {
        return static_cast<std::uint8_t>(kLetters[static_cast<std::size_t>(c)]);
    }
    return static_cast<std::uint8_t>(c);
}

Instance gen_planted(std::int64_t n, std::int64_t e, std::int64_t sigma, std::uint64_t seed,
                     bool raw_edits) {
    check_sigma(sigma);
    if (n < 0 || e < 0 || e > n) {
        throw std::invalid_argument("gen_planted: need 0 <= e <= n");
    }
    Rng rng = substream(seed, "gen");
    Instance inst;
    inst.kind = "planted";
    inst.sigma = sigma;
    inst.seed = seed;
    std::vector<Symbol> a = random_symbols(n, sigma, rng);
    std::vector<Symbol> b = a;

    std::int64_t inserts = 0, deletes = 0;
    if (raw_edits) {
        inserts = uniform(rng, 0, e);
        deletes = uniform(rng, 0, e - inserts);
    } else {
        inserts = deletes = uniform(rng, 0, e / 2);
    }
    std::int64_t subs = e - inserts - deletes;
    // Interleave the edit kinds in random order.
    std::vector<int> kinds;
    kinds.insert(kinds.end(), static_cast<std::size_t>(inserts), 0);
    kinds.insert(kinds.end(), static_cast<std::size_t>(deletes), 1);
    kinds.insert(kinds.end(), static_cast<std::size_t>(subs), 2);
    std::shuffle(kinds.begin(), kinds.end(), rng);
    for (int kind : kinds) {
        const auto size = static_cast<std::int64_t>(b.size());
        if (kind == 0) {
            const std::int64_t p = uniform(rng, 0, size);
            b.insert(b.begin() + p, sym(uniform(rng, 0, sigma - 1), sigma));
        } else if (size == 0) {
            continue;
        } else if (kind == 1) {
            b.erase(b.begin() + uniform(rng, 0, size - 1));
        } else {
            auto& s = b[static_cast<std::size_t>(uniform(rng, 0, size - 1))];
            s = different_symbol(s, sigma, rng);
        }
    }
    inst.planted_edits = e;
    if (static_cast<std::int64_t>(b.size()) != n) {
        const std::int64_t fix = std::abs(static_cast<std::int64_t>(b.size()) - n);
        while (static_cast<std::int64_t>(b.size()) > n) {
            b.pop_back();
        }
        while (static_cast<std::int64_t>(b.size()) < n) {
            b.push_back(sym(uniform(rng, 0, sigma - 1), sigma));
        }
        inst.planted_edits += fix;
    }
    inst.a = ByteString(std::move(a));
    inst.b = ByteString(std::move(b));
    inst.exact_ed = edit_distance_exact(inst.a, inst.b);
    inst.certificate = "exact banded DP";
    return inst;
}

Instance gen_large_side(std::int64_t n, std::int64_t k, std::int64_t threshold, std::int64_t sigma,
                        std::uint64_t seed, int max_attempts) {
    check_sigma(sigma);
    if (threshold < 0 || threshold >= n) {
        throw std::invalid_argument("gen_large_side: need 0 <= threshold < n");
    }
    Rng rng = substream(seed, "gen");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> pick(0, sigma - 1);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const double skew = std::min(1.0, 0.25 * attempt);
        std::vector<Symbol> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        for (auto& s : a) {
            s = sym(coin(rng) < skew ? 0 : pick(rng), sigma);
        }
        for (auto& s : b) {
            s = sym(coin(rng) < skew ? 1 : pick(rng), sigma);
        }
        const std::int64_t banded = edit_distance_banded(a, b, threshold);
        if (banded <= threshold) {
            continue;
        }
        Instance inst;
        inst.kind = "large_side";
        inst.sigma = sigma;
        inst.seed = seed;
        inst.a = ByteString(std::move(a));
        inst.b = ByteString(std::move(b));
        inst.exact_ed = edit_distance_quadratic(inst.a.symbols(), inst.b.symbols());
        inst.planted_edits = *inst.exact_ed;
        inst.label = Label::large_side;
        inst.threshold = threshold;
        std::ostringstream cert;
        cert << "banded DP with band " << threshold << " exceeded it (k = " << k
             << ", attempt " << attempt << "); exact ED by quadratic DP";
        inst.certificate = cert.str();
        return inst;
    }
    throw PreconditionError("gen_large_side: no pair with ED > " + std::to_string(threshold) +
                             " after " + std::to_string(max_attempts) + " attempts");
}

Instance gen_periodic(std::int64_t n, std::int64_t period, std::int64_t sigma, std::uint64_t seed,
                      std::int64_t edits) {
    check_sigma(sigma);
    if (period < 1 || period > n) {
        throw std::invalid_argument("gen_periodic: need 1 <= period <= n");
    }
    if (edits < 0 || edits > n) {
        throw std::invalid_argument("gen_periodic: need 0 <= edits <= n");
    }
    Rng rng = substream(seed, "gen");
    const std::vector<Symbol> block = random_symbols(period, sigma, rng);
    std::vector<Symbol> a(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)] = block[static_cast<std::size_t>(i % period)];
    }
    const std::int64_t r = uniform(rng, 1, period);
    std::vector<Symbol> b(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        b[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>((i + r) % n)];
    }
    for (std::int64_t t = 0; t < edits; ++t) {
        auto& s = b[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
        s = different_symbol(s, sigma, rng);
    }
    Instance inst;
    inst.kind = "periodic";
    inst.sigma = sigma;
    inst.seed = seed;
    inst.planted_edits = 2 * r + edits;
    inst.a = ByteString(std::move(a));
    inst.b = ByteString(std::move(b));
    inst.exact_ed = edit_distance_exact(inst.a, inst.b);
    inst.certificate = "exact banded DP";
    return inst;
}

void label_small_side(Instance& inst, std::int64_t threshold) {
    if (!inst.exact_ed) {
        inst.exact_ed = edit_distance_exact(inst.a, inst.b);
    }
    if (*inst.exact_ed <= threshold) {
        inst.label = Label::small_side;
        inst.threshold = threshold;
    }
}

std::string manifest_json(const Instance& inst) {
    nlohmann::json j;
    j["n"] = inst.a.size();
    j["sigma"] = inst.sigma;
    j["seed"] = inst.seed;
    j["kind"] = inst.kind;
    j["planted_edits"] = inst.planted_edits;
    j["exact_ed"] = inst.exact_ed ? nlohmann::json(*inst.exact_ed) : nlohmann::json(nullptr);
    j["label"] = std::string(to_string(inst.label));
    j["threshold"] = inst.threshold ? nlohmann::json(*inst.threshold) : nlohmann::json(nullptr);
    j["certificate"] = inst.certificate;
    return j.dump(2);
}

ByteString read_string_file(const std::string& path) {
    const auto data = detail::read_file(path);
    return ByteString::from_bytes(data);
}

void write_string_file(const ByteString& s, const std::string& path) {
    detail::write_file(path, s.to_bytes());
}

void write_instance(const Instance& inst, const std::string& prefix) {
    write_string_file(inst.a, prefix + ".a");
    write_string_file(inst.b, prefix + ".b");
    std::ofstream out(prefix + ".json", std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + prefix + ".json for writing");
    }
    out << manifest_json(inst) << '\n';
}

Instance read_instance(const std::string& prefix) {
    Instance inst;
    inst.a = read_string_file(prefix + ".a");
    inst.b = read_string_file(prefix + ".b");
    const std::string manifest = prefix + ".json";
    if (!std::filesystem::exists(manifest)) {
        return inst;
    }
    std::ifstream in(manifest);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(manifest + ": " + e.what());
    }
    inst.sigma = j.value("sigma", std::int64_t{0});
    inst.seed = j.value("seed", std::uint64_t{0});
    inst.kind = j.value("kind", std::string{});
    inst.planted_edits = j.value("planted_edits", std::int64_t{0});
    if (j.contains("exact_ed") && !j["exact_ed"].is_null()) {
        inst.exact_ed = j["exact_ed"].get<std::int64_t>();
    }
    if (j.contains("threshold") && !j["threshold"].is_null()) {
        inst.threshold = j["threshold"].get<std::int64_t>();
    }
    const std::string label = j.value("label", std::string{"unlabeled"});
    inst.label = label == "small_side" ? Label::small_side
                 : label == "large_side" ? Label::large_side
                                         : Label::unlabeled;
    inst.certificate = j.value("certificate", std::string{});
    return inst;
}

}  // namespace gapedit
