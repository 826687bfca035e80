#include "gapedit/rolling_hash.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "gapedit/random.hpp"

namespace gapedit {

std::uint64_t powmod61(std::uint64_t base, std::uint64_t e) noexcept {
    std::uint64_t result = 1;
    base %= kMersenne61;
    while (e > 0) {
        if (e & 1) {
            result = mulmod61(result, base);
        }
        base = mulmod61(base, base);
        e >>= 1;
    }
    return result;
}

HashConfig HashConfig::from_seed(std::uint64_t seed) {
    Rng rng = substream(seed, "x");
    std::uniform_int_distribution<std::uint64_t> dist(0, kMersenne61 - 1);
    HashConfig cfg;
    cfg.x = dist(rng);
    cfg.rng_seed = seed;
    return cfg;
}

HashContext::HashContext(HashConfig cfg, std::int64_t max_power) : cfg_(cfg) {
    if (cfg_.p != kMersenne61) {
        throw std::invalid_argument("HashContext: only p = 2^61 - 1 is supported");
    }
    if (cfg_.x >= cfg_.p) {
        throw std::invalid_argument("HashContext: x must lie in [0, p-1]");
    }
    powers_.resize(static_cast<std::size_t>(std::max<std::int64_t>(max_power, 0) + 1));
    powers_[0] = 1;
    for (std::size_t m = 1; m < powers_.size(); ++m) {
        powers_[m] = mulmod61(powers_[m - 1], cfg_.x);
    }
}

HashContextPtr make_hash_context(const HashConfig& cfg, std::int64_t n) {
    return std::make_shared<const HashContext>(cfg, n + 1);
}

bool SampleSet::contains(std::int64_t i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

double sample_rate(std::int64_t n, std::int64_t granularity) {
    if (granularity <= 1) {
        return 1.0;
    }
    return std::min(4.0 * std::log(static_cast<double>(n)) / static_cast<double>(granularity), 1.0);
}

SampleSet draw_sample(std::int64_t n, std::int64_t granularity, bool force_anchors,
                      const HashConfig& cfg) {
    if (n < 1 || granularity < 1) {
        throw std::invalid_argument("draw_sample: need n >= 1 and granularity >= 1");
    }
    SampleSet s;
    s.n = n;
    s.granularity = granularity;
    s.rate = sample_rate(n, granularity);
    s.anchored = force_anchors;

    std::vector<std::int64_t> drawn;
    if (s.rate >= 1.0) {
        drawn.resize(static_cast<std::size_t>(n));
        for (std::int64_t i = 1; i <= n; ++i) {
            drawn[static_cast<std::size_t>(i - 1)] = i;
        }
    } else if (s.rate > 0.0) {
        // Geometric gaps between successes: same distribution as n coin
        // flips, O(|S|) work.
        Rng rng = substream(cfg.rng_seed, "sample");
        std::geometric_distribution<std::int64_t> gap(s.rate);
        drawn.reserve(static_cast<std::size_t>(s.rate * static_cast<double>(n) * 1.2) + 16);
        for (std::int64_t i = gap(rng) + 1; i <= n; i += gap(rng) + 1) {
            drawn.push_back(i);
        }
    }

    if (!force_anchors) {
        s.indices = std::move(drawn);
        return s;
    }
    std::vector<std::int64_t> anchors;
    for (std::int64_t m = granularity; m <= n; m += granularity) {
        anchors.push_back(m);
    }
    if (n - 1 >= 1) {
        anchors.insert(std::upper_bound(anchors.begin(), anchors.end(), n - 1), n - 1);
    }
    s.indices.reserve(drawn.size() + anchors.size());
    std::set_union(drawn.begin(), drawn.end(), anchors.begin(), anchors.end(),
                   std::back_inserter(s.indices));
    s.indices.erase(std::unique(s.indices.begin(), s.indices.end()), s.indices.end());
    return s;
}

SampleSet full_sample(std::int64_t n) {
    SampleSet s;
    s.n = n;
    s.indices.resize(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    for (std::int64_t i = 1; i <= n; ++i) {
        s.indices[static_cast<std::size_t>(i - 1)] = i;
    }
    return s;
}

RollingHashState::RollingHashState(HashContextPtr ctx, SamplePtr sample, std::int64_t offset,
                                   std::vector<std::uint64_t> prefixes)
    : ctx_(std::move(ctx)), sample_(std::move(sample)), offset_(offset), prefixes_(std::move(prefixes)) {
    if (!ctx_ || !sample_) {
        throw std::invalid_argument("RollingHashState: null context or sample");
    }
    if (prefixes_.size() != sample_->indices.size() + 1) {
        throw std::invalid_argument("RollingHashState: need |S| + 1 prefixes");
    }
    if (ctx_->max_power() < sample_->size()) {
        throw std::invalid_argument("RollingHashState: power table shorter than the sample");
    }
}

std::pair<std::int64_t, std::int64_t> RollingHashState::rank_range(std::int64_t i, std::int64_t j) const {
    const auto& idx = sample_->indices;
    if (j < i) {
        return {0, 0};
    }
    const auto lo = std::lower_bound(idx.begin(), idx.end(), i - offset_) - idx.begin();
    const auto hi = std::upper_bound(idx.begin() + lo, idx.end(), j - offset_) - idx.begin();
    return {lo, hi};
}

std::uint64_t RollingHashState::retrieve(std::int64_t i, std::int64_t j) const {
    const auto [lo, hi] = rank_range(i, j);
    return hash_ranks(lo, hi);
}

RollingHashState init_rolling_hash(const ByteString& a, HashContextPtr ctx, SamplePtr sample,
                                   std::int64_t offset) {
    std::vector<std::uint64_t> h(sample->indices.size() + 1);
    h[0] = 0;
    const std::uint64_t x = ctx->x();
    for (std::size_t t = 0; t < sample->indices.size(); ++t) {
        h[t + 1] = addmod61(mulmod61(h[t], x), a.at(sample->indices[t] + offset));
    }
    return RollingHashState(std::move(ctx), std::move(sample), offset, std::move(h));
}

std::uint64_t hash_symbols(std::span<const Symbol> symbols, std::uint64_t x) {
    std::uint64_t c = 0;
    for (Symbol s : symbols) {
        c = addmod61(mulmod61(c, x), s);
    }
    return c;
}

std::string hash_sidecar_json(const HashConfig& cfg, const SampleSet& sample) {
    nlohmann::json j;
    j["p"] = cfg.p;
    j["x"] = cfg.x;
    j["rng_seed"] = cfg.rng_seed;
    j["sample"] = {{"n", sample.n},
                   {"granularity", sample.granularity},
                   {"rate", sample.rate},
                   {"anchored", sample.anchored},
                   {"indices", sample.indices}};
    return j.dump();
}

void parse_hash_sidecar_json(const std::string& text, HashConfig& cfg, SampleSet& sample) {
    const auto j = nlohmann::json::parse(text);
    HashConfig c;
    c.p = j.at("p").get<std::uint64_t>();
    c.x = j.at("x").get<std::uint64_t>();
    c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    if (c.p != kMersenne61 || c.x >= c.p) {
        throw std::runtime_error("hash sidecar: bad modulus or evaluation point");
    }
    const auto& js = j.at("sample");
    SampleSet s;
    s.n = js.at("n").get<std::int64_t>();
    s.granularity = js.at("granularity").get<std::int64_t>();
    s.rate = js.at("rate").get<double>();
    s.anchored = js.at("anchored").get<bool>();
    s.indices = js.at("indices").get<std::vector<std::int64_t>>();
    for (std::size_t t = 0; t < s.indices.size(); ++t) {
        if (s.indices[t] < 1 || s.indices[t] > s.n || (t > 0 && s.indices[t] <= s.indices[t - 1])) {
            throw std::runtime_error("hash sidecar: sample indices must be increasing within [1, n]");
        }
    }
    cfg = c;
    sample = std::move(s);
}

}  // namespace gapedit
