#include "gapedit/one_sided.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "binary_io.hpp"
#include "gapedit/errors.hpp"

namespace gapedit {

namespace {

constexpr char kMagic[] = "GEDT1S";

// Positions where the sampled content of the window [i, i+len-1] changes,
// plus 1, with the rank range of the window.
struct Window {
    std::int64_t pos;
    std::int64_t lo;
    std::int64_t hi;
};

std::vector<Window> windows_for_length(const SampleSet& s, std::int64_t len) {
    std::vector<std::int64_t> pos;
    pos.reserve(2 * s.indices.size() + 1);
    pos.push_back(1);
    for (std::int64_t x : s.indices) {
        pos.push_back(x + 1);
        pos.push_back(x - len + 1);
    }
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    std::vector<Window> out;
    out.reserve(pos.size());
    const auto& idx = s.indices;
    for (std::int64_t p : pos) {
        if (p < 1 || p > s.n) {
            continue;
        }
        const auto lo = std::lower_bound(idx.begin(), idx.end(), p) - idx.begin();
        const auto hi = std::upper_bound(idx.begin() + lo, idx.end(), p + len - 1) - idx.begin();
        out.push_back({p, lo, hi});
    }
    return out;
}

}  // namespace

void OneSidedIndex::set_geometry() {
    levels_ = n_ >= 1 ? floor_log2(n_) + 1 : 0;
    ncols_ = n_ / g_ + 1;
    if (kind_ == IndexKind::wave) {
        acol_min_ = floor_div(-max_shift_, g_);
        nacols_ = floor_div(max_shift_, g_) - acol_min_ + 1;
    } else {
        acol_min_ = 0;
        nacols_ = 1;
    }
}

std::size_t OneSidedIndex::key(std::int64_t level, std::int64_t col, std::int64_t shift_col) const {
    return static_cast<std::size_t>((level * ncols_ + col) * nacols_ + (shift_col - acol_min_));
}

OneSidedIndex build_shift_tables(const ByteString& a, IndexKind kind, std::int64_t k,
                                 std::int64_t granularity, const HashConfig& cfg,
                                 const SamplePtr& sample) {
    const std::int64_t n = a.size();
    if (n < 1) {
        throw std::invalid_argument("one-sided preprocessing: A must be nonempty");
    }
    if (k < 1 || granularity < 1) {
        throw std::invalid_argument("one-sided preprocessing: need k >= 1 and granularity >= 1");
    }
    if (!sample || sample->n != n || !sample->anchored || sample->granularity != granularity) {
        throw std::invalid_argument("one-sided preprocessing: sample must be anchored at the index granularity over [1, n]");
    }
    OneSidedIndex idx;
    idx.kind_ = kind;
    idx.n_ = n;
    idx.k_ = k;
    idx.g_ = granularity;
    idx.max_shift_ = kind == IndexKind::wave ? k + granularity : k;
    idx.set_geometry();
    idx.ctx_ = make_hash_context(cfg, n);
    idx.sample_ = sample;

    const auto& s = sample->indices;
    std::vector<std::vector<Window>> windows(static_cast<std::size_t>(idx.levels_));
    for (std::int64_t e = 0; e < idx.levels_; ++e) {
        windows[static_cast<std::size_t>(e)] = windows_for_length(*sample, std::int64_t{1} << e);
    }
    const std::size_t ncells = static_cast<std::size_t>(idx.levels_ * idx.ncols_ * idx.nacols_);
    auto keep = [&](const Window& w, std::int64_t len, std::int64_t shift) {
        if (w.pos + len - 1 + shift > n) {
            return false;
        }
        return w.lo == w.hi || s[static_cast<std::size_t>(w.lo)] + shift >= 1;
    };
    auto shift_col = [&](std::int64_t shift) {
        return kind == IndexKind::wave ? floor_div(shift, granularity) : std::int64_t{0};
    };

    std::vector<std::int64_t> count(ncells + 1, 0);
    for (std::int64_t shift = -idx.max_shift_; shift <= idx.max_shift_; ++shift) {
        const std::int64_t sc = shift_col(shift);
        for (std::int64_t e = 0; e < idx.levels_; ++e) {
            const std::int64_t len = std::int64_t{1} << e;
            for (const Window& w : windows[static_cast<std::size_t>(e)]) {
                if (keep(w, len, shift)) {
                    ++count[idx.key(e, w.pos / granularity, sc) + 1];
                }
            }
        }
    }
    for (std::size_t c = 1; c <= ncells; ++c) {
        count[c] += count[c - 1];
    }
    std::vector<std::uint64_t> raw(static_cast<std::size_t>(count[ncells]));
    std::vector<std::int64_t> cursor(count.begin(), count.end() - 1);
    for (std::int64_t shift = -idx.max_shift_; shift <= idx.max_shift_; ++shift) {
        const RollingHashState state = init_rolling_hash(a, idx.ctx_, sample, shift);
        idx.preprocess_ops_ += sample->size();
        const std::int64_t sc = shift_col(shift);
        for (std::int64_t e = 0; e < idx.levels_; ++e) {
            const std::int64_t len = std::int64_t{1} << e;
            for (const Window& w : windows[static_cast<std::size_t>(e)]) {
                if (keep(w, len, shift)) {
                    const std::size_t c = idx.key(e, w.pos / granularity, sc);
                    raw[static_cast<std::size_t>(cursor[c]++)] = state.hash_ranks(w.lo, w.hi);
                    ++idx.preprocess_ops_;
                }
            }
        }
    }

    // Sort and deduplicate each cell, compacting into the final arrays.
    idx.cell_start_.assign(ncells + 1, 0);
    idx.values_.clear();
    idx.values_.reserve(raw.size());
    for (std::size_t c = 0; c < ncells; ++c) {
        auto first = raw.begin() + count[c];
        auto last = raw.begin() + count[c + 1];
        std::sort(first, last);
        last = std::unique(first, last);
        idx.values_.insert(idx.values_.end(), first, last);
        idx.cell_start_[c + 1] = static_cast<std::int64_t>(idx.values_.size());
    }
    idx.values_.shrink_to_fit();
    return idx;
}

OneSidedIndex one_sided_preprocess(const ByteString& a, std::int64_t k, const HashConfig& cfg,
                                   const SamplePtr& sample) {
    return build_shift_tables(a, IndexKind::gap, k, k, cfg, sample);
}

OneSidedIndex one_sided_preprocess(const ByteString& a, std::int64_t k, const HashConfig& cfg) {
    if (a.size() < 1 || k < 1) {
        throw std::invalid_argument("one_sided_preprocess: need nonempty A and k >= 1");
    }
    auto sample = std::make_shared<const SampleSet>(draw_sample(a.size(), k, true, cfg));
    return one_sided_preprocess(a, k, cfg, sample);
}

bool OneSidedIndex::base_contains(std::int64_t level, std::int64_t col, std::int64_t shift_col,
                                  std::uint64_t h) const {
    if (level < 0 || level >= levels_ || col < 0 || col >= ncols_ || shift_col < acol_min_ ||
        shift_col >= acol_min_ + nacols_) {
        return false;
    }
    const std::size_t c = key(level, col, shift_col);
    const auto first = values_.begin() + cell_start_[c];
    const auto last = values_.begin() + cell_start_[c + 1];
    return std::binary_search(first, last, h);
}

bool OneSidedIndex::contains(std::int64_t level, std::int64_t col, std::int64_t shift_col,
                             std::uint64_t h) const {
    const std::int64_t spread = kind_ == IndexKind::wave ? 1 : 0;
    for (std::int64_t dc = -1; dc <= 1; ++dc) {
        for (std::int64_t ds = -spread; ds <= spread; ++ds) {
            if (base_contains(level, col + dc, shift_col + ds, h)) {
                return true;
            }
        }
    }
    return false;
}

std::vector<std::uint64_t> OneSidedIndex::base_cell(std::int64_t level, std::int64_t col,
                                                    std::int64_t shift_col) const {
    if (level < 0 || level >= levels_ || col < 0 || col >= ncols_ || shift_col < acol_min_ ||
        shift_col >= acol_min_ + nacols_) {
        return {};
    }
    const std::size_t c = key(level, col, shift_col);
    return {values_.begin() + cell_start_[c], values_.begin() + cell_start_[c + 1]};
}

std::vector<std::uint64_t> OneSidedIndex::cell(std::int64_t level, std::int64_t col,
                                               std::int64_t shift_col) const {
    std::vector<std::uint64_t> out;
    const std::int64_t spread = kind_ == IndexKind::wave ? 1 : 0;
    for (std::int64_t dc = -1; dc <= 1; ++dc) {
        for (std::int64_t ds = -spread; ds <= spread; ++ds) {
            const auto part = base_cell(level, col + dc, shift_col + ds);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint8_t> OneSidedIndex::serialize() const {
    detail::Writer w;
    w.bytes(kMagic);
    w.u8(static_cast<std::uint8_t>(kind_));
    w.u64(ctx_->config().p);
    w.u64(ctx_->config().x);
    w.u64(ctx_->config().rng_seed);
    w.i64(k_);
    if (kind_ == IndexKind::wave) {
        w.i64(g_);
    }
    w.i64(n_);
    std::uint64_t rate_bits = 0;
    std::memcpy(&rate_bits, &sample_->rate, sizeof rate_bits);
    w.u64(rate_bits);
    w.i64(sample_->size());
    for (std::int64_t x : sample_->indices) {
        w.i64(x);
    }
    w.i64(preprocess_ops_);
    const std::size_t ncells = cell_start_.size() - 1;
    for (std::size_t c = 0; c < ncells; ++c) {
        w.i64(cell_start_[c + 1] - cell_start_[c]);
        for (std::int64_t t = cell_start_[c]; t < cell_start_[c + 1]; ++t) {
            w.u64(values_[static_cast<std::size_t>(t)]);
        }
    }
    return w.finish();
}

OneSidedIndex OneSidedIndex::deserialize(const std::vector<std::uint8_t>& data) {
    detail::Reader r(data, "one-sided index");
    r.expect(kMagic);
    const std::uint8_t version = r.u8();
    if (version != static_cast<std::uint8_t>(IndexKind::gap) &&
        version != static_cast<std::uint8_t>(IndexKind::wave)) {
        r.fail("unsupported version");
    }
    OneSidedIndex idx;
    idx.kind_ = static_cast<IndexKind>(version);
    HashConfig cfg;
    cfg.p = r.u64();
    cfg.x = r.u64();
    cfg.rng_seed = r.u64();
    if (cfg.p != kMersenne61 || cfg.x >= cfg.p) {
        r.fail("bad modulus or evaluation point");
    }
    idx.k_ = r.i64();
    idx.g_ = idx.kind_ == IndexKind::wave ? r.i64() : idx.k_;
    idx.n_ = r.i64();
    if (idx.k_ < 1 || idx.g_ < 1 || idx.n_ < 1 || idx.n_ > (1LL << 32) ||
        (idx.kind_ == IndexKind::wave && idx.g_ > idx.k_)) {
        r.fail("bad k, l or n");
    }
    idx.max_shift_ = idx.kind_ == IndexKind::wave ? idx.k_ + idx.g_ : idx.k_;
    idx.set_geometry();

    SampleSet s;
    s.n = idx.n_;
    s.granularity = idx.g_;
    s.anchored = true;
    const std::uint64_t rate_bits = r.u64();
    std::memcpy(&s.rate, &rate_bits, sizeof rate_bits);
    const std::int64_t ssize = r.i64();
    if (ssize < 0 || ssize > idx.n_ || static_cast<std::size_t>(ssize) * 8 > r.remaining()) {
        r.fail("bad sample size");
    }
    s.indices.resize(static_cast<std::size_t>(ssize));
    for (std::size_t t = 0; t < s.indices.size(); ++t) {
        s.indices[t] = r.i64();
        if (s.indices[t] < 1 || s.indices[t] > idx.n_ || (t > 0 && s.indices[t] <= s.indices[t - 1])) {
            r.fail("sample indices must be increasing within [1, n]");
        }
    }
    for (std::int64_t m = idx.g_; m <= idx.n_; m += idx.g_) {
        if (!s.contains(m)) {
            r.fail("sample is missing an anchor");
        }
    }
    if (idx.n_ - 1 >= 1 && !s.contains(idx.n_ - 1)) {
        r.fail("sample is missing n-1");
    }
    idx.preprocess_ops_ = r.i64();

    const auto ncells = static_cast<std::size_t>(idx.levels_ * idx.ncols_ * idx.nacols_);
    idx.cell_start_.assign(ncells + 1, 0);
    for (std::size_t c = 0; c < ncells; ++c) {
        const std::int64_t cnt = r.i64();
        if (cnt < 0 || static_cast<std::size_t>(cnt) * 8 > r.remaining()) {
            r.fail("bad cell size");
        }
        for (std::int64_t t = 0; t < cnt; ++t) {
            const std::uint64_t v = r.u64();
            if (v >= cfg.p || (t > 0 && v <= idx.values_.back())) {
                r.fail("cell values must be increasing and below p");
            }
            idx.values_.push_back(v);
        }
        idx.cell_start_[c + 1] = static_cast<std::int64_t>(idx.values_.size());
    }
    r.done();
    idx.ctx_ = make_hash_context(cfg, idx.n_);
    idx.sample_ = std::make_shared<const SampleSet>(std::move(s));
    return idx;
}

void OneSidedIndex::save(const std::string& path) const {
    detail::write_file(path, serialize());
}

OneSidedIndex OneSidedIndex::load(const std::string& path) {
    return deserialize(detail::read_file(path));
}

RollingHashState one_sided_process_b(const OneSidedIndex& idx, const ByteString& b) {
    if (b.size() != idx.n()) {
        throw std::invalid_argument("one_sided_process_b: |B| must equal the indexed n");
    }
    return init_rolling_hash(b, idx.context(), idx.sample());
}

std::int64_t one_sided_max_align(const OneSidedIndex& idx, const RollingHashState& h_b,
                                 std::int64_t i_b, OpCounters& counters) {
    const std::int64_t n = idx.n();
    const std::int64_t col = i_b / idx.k();
    for (std::int64_t e = idx.levels() - 1; e >= 0; --e) {
        const std::int64_t d = std::int64_t{1} << e;
        if (i_b + d - 1 > n) {
            continue;
        }
        const std::uint64_t h = h_b.retrieve(i_b, i_b + d - 1);
        ++counters.hash_retrievals;
        ++counters.table_lookups;
        if (idx.contains(e, col, 0, h)) {
            return d;
        }
    }
    return 0;
}

GapRun gap_one_sided(const OneSidedIndex& idx, const ByteString& a, const ByteString& b,
                     bool record_trace) {
    if (idx.kind() != IndexKind::gap) {
        throw std::invalid_argument("gap_one_sided: index was built for the wave variant");
    }
    if (a.size() != idx.n() || b.size() != idx.n()) {
        throw std::invalid_argument("gap_one_sided: string lengths must match the index");
    }
    GapRun run;
    run.sample_size = idx.sample()->size();
    const RollingHashState h_b = one_sided_process_b(idx, b);
    const OneSidedMaxAlign oracle(idx, h_b);
    run.result = greedy_match(a, b, idx.k(), oracle, record_trace);
    run.result.counters.symbols_hashed += idx.sample()->size();
    return run;
}

}  // namespace gapedit
