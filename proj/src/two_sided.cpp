#include "gapedit/two_sided.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "binary_io.hpp"
#include "gapedit/errors.hpp"

namespace gapedit {

namespace {

constexpr char kMagic[] = "GEDT2S";
constexpr std::uint8_t kVersion = 1;

}  // namespace

// rows holds, for L = 1..n, the hashes of A[s, s+L-1] for s = 1..n-L+1.
void TwoSidedIndex::build_from_rows(std::vector<std::uint64_t> rows) {
    const std::int64_t n = n_;
    first_.assign(static_cast<std::size_t>(n + 2), 0);
    for (std::int64_t len = 1; len <= n; ++len) {
        first_[static_cast<std::size_t>(len + 1)] = first_[static_cast<std::size_t>(len)] + (n - len + 1);
    }
    hashes_ = std::move(rows);
    starts_.resize(hashes_.size());
    std::vector<std::uint32_t> order;
    std::vector<std::uint64_t> tmp;
    for (std::int64_t len = 1; len <= n; ++len) {
        const auto base = static_cast<std::size_t>(first_[static_cast<std::size_t>(len)]);
        const auto count = static_cast<std::size_t>(n - len + 1);
        order.resize(count);
        std::iota(order.begin(), order.end(), 0U);
        const std::uint64_t* row = hashes_.data() + base;
        std::sort(order.begin(), order.end(), [row](std::uint32_t u, std::uint32_t v) {
            return row[u] != row[v] ? row[u] < row[v] : u < v;
        });
        tmp.resize(count);
        for (std::size_t t = 0; t < count; ++t) {
            tmp[t] = row[order[t]];
            starts_[base + t] = order[t] + 1;
        }
        std::copy(tmp.begin(), tmp.end(), hashes_.begin() + static_cast<std::ptrdiff_t>(base));
    }
}

TwoSidedIndex two_sided_preprocess(const ByteString& a, std::int64_t k, const HashConfig& cfg,
                                   std::int64_t limit) {
    if (k < 0) {
        throw std::invalid_argument("two_sided_preprocess: k must be nonnegative");
    }
    const std::int64_t n = a.size();
    if (n > limit) {
        throw LimitError("two_sided_preprocess: n = " + std::to_string(n) +
                         " exceeds the materialization limit " + std::to_string(limit) +
                         " (the index holds n(n+1)/2 hashes)");
    }
    TwoSidedIndex idx;
    idx.ctx_ = make_hash_context(cfg, n);
    idx.n_ = n;
    idx.k_ = k;
    auto full = std::make_shared<const SampleSet>(full_sample(n));
    const RollingHashState h_a = init_rolling_hash(a, idx.ctx_, full);
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
    for (std::int64_t len = 1; len <= n; ++len) {
        for (std::int64_t s = 1; s + len - 1 <= n; ++s) {
            rows.push_back(h_a.hash_ranks(s - 1, s + len - 1));
        }
    }
    idx.build_from_rows(std::move(rows));
    return idx;
}

bool TwoSidedIndex::contains(std::int64_t i, std::int64_t j, std::uint64_t h) const {
    const std::int64_t len = j - i + 1;
    if (len < 1 || len > n_) {
        return false;
    }
    const auto lo = static_cast<std::size_t>(first_[static_cast<std::size_t>(len)]);
    const auto hi = static_cast<std::size_t>(first_[static_cast<std::size_t>(len + 1)]);
    const std::int64_t min_start = i - k_;
    // Lexicographic (hash, start) lower bound.
    std::size_t left = lo, right = hi;
    while (left < right) {
        const std::size_t mid = left + (right - left) / 2;
        if (hashes_[mid] < h || (hashes_[mid] == h && starts_[mid] < min_start)) {
            left = mid + 1;
        } else {
            right = mid;
        }
    }
    return left < hi && hashes_[left] == h && starts_[left] <= i + k_;
}

std::vector<std::uint64_t> TwoSidedIndex::cell(std::int64_t i, std::int64_t j) const {
    std::vector<std::uint64_t> out;
    const std::int64_t len = j - i + 1;
    if (len < 1 || len > n_) {
        return out;
    }
    const auto lo = static_cast<std::size_t>(first_[static_cast<std::size_t>(len)]);
    const auto hi = static_cast<std::size_t>(first_[static_cast<std::size_t>(len + 1)]);
    for (std::size_t t = lo; t < hi; ++t) {
        if (starts_[t] >= i - k_ && starts_[t] <= i + k_) {
            out.push_back(hashes_[t]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint8_t> TwoSidedIndex::serialize() const {
    detail::Writer w;
    w.bytes(kMagic);
    w.u8(kVersion);
    w.u64(ctx_->config().p);
    w.u64(ctx_->config().x);
    w.i64(k_);
    w.i64(n_);
    // Rows in start order, so the file does not depend on the sort.
    std::vector<std::uint64_t> row;
    for (std::int64_t len = 1; len <= n_; ++len) {
        const auto base = static_cast<std::size_t>(first_[static_cast<std::size_t>(len)]);
        const auto count = static_cast<std::size_t>(n_ - len + 1);
        row.assign(count, 0);
        for (std::size_t t = 0; t < count; ++t) {
            row[starts_[base + t] - 1] = hashes_[base + t];
        }
        for (std::uint64_t v : row) {
            w.u64(v);
        }
    }
    return w.finish();
}

TwoSidedIndex TwoSidedIndex::deserialize(const std::vector<std::uint8_t>& data) {
    detail::Reader r(data, "two-sided index");
    r.expect(kMagic);
    if (r.u8() != kVersion) {
        r.fail("unsupported version");
    }
    HashConfig cfg;
    cfg.p = r.u64();
    cfg.x = r.u64();
    if (cfg.p != kMersenne61 || cfg.x >= cfg.p) {
        r.fail("bad modulus or evaluation point");
    }
    const std::int64_t k = r.i64();
    const std::int64_t n = r.i64();
    if (k < 0 || n < 0 || n > (1LL << 20)) {
        r.fail("bad k or n");
    }
    const auto total = static_cast<std::size_t>(n * (n + 1) / 2);
    if (r.remaining() != total * 8) {
        r.fail("size does not match n");
    }
    std::vector<std::uint64_t> rows(total);
    for (auto& v : rows) {
        v = r.u64();
        if (v >= cfg.p) {
            r.fail("hash value out of range");
        }
    }
    r.done();
    TwoSidedIndex idx;
    idx.ctx_ = make_hash_context(cfg, n);
    idx.n_ = n;
    idx.k_ = k;
    idx.build_from_rows(std::move(rows));
    return idx;
}

void TwoSidedIndex::save(const std::string& path) const {
    detail::write_file(path, serialize());
}

TwoSidedIndex TwoSidedIndex::load(const std::string& path) {
    return deserialize(detail::read_file(path));
}

RollingHashState two_sided_process_b(const TwoSidedIndex& idx, const ByteString& b) {
    if (b.size() != idx.n()) {
        throw std::invalid_argument("two_sided_process_b: |B| must equal the indexed n");
    }
    auto full = std::make_shared<const SampleSet>(full_sample(b.size()));
    return init_rolling_hash(b, idx.context(), full);
}

std::int64_t two_sided_max_align(const TwoSidedIndex& idx, const RollingHashState& h_b,
                                 std::int64_t i_b, OpCounters& counters) {
    std::int64_t lo = 0;
    std::int64_t hi = idx.n() - i_b + 1;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        const std::uint64_t h = h_b.retrieve(i_b, i_b + mid - 1);
        ++counters.hash_retrievals;
        ++counters.table_lookups;
        if (idx.contains(i_b, i_b + mid - 1, h)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

GapRun gap_two_sided(const TwoSidedIndex& idx, const ByteString& a, const ByteString& b,
                     bool record_trace) {
    if (a.size() != idx.n() || b.size() != idx.n()) {
        throw std::invalid_argument("gap_two_sided: string lengths must match the index");
    }
    GapRun run;
    run.sample_size = b.size();
    const RollingHashState h_b = two_sided_process_b(idx, b);
    const TwoSidedMaxAlign oracle(idx, h_b);
    run.result = greedy_match(a, b, idx.k(), oracle, record_trace);
    run.result.counters.symbols_hashed += b.size();
    return run;
}

}  // namespace gapedit
