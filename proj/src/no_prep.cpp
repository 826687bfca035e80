#include "gapedit/no_prep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gapedit {

std::int64_t ceil_sqrt(std::int64_t k) {
    if (k <= 0) {
        return 0;
    }
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(k)));
    while (s * s < k) {
        ++s;
    }
    while (s > 0 && (s - 1) * (s - 1) >= k) {
        --s;
    }
    return s;
}

namespace detail {

ShiftedHashFamily build_family(const ByteString& s, Side side, std::int64_t step,
                               const std::vector<std::int64_t>& offsets, const HashContextPtr& ctx,
                               const SamplePtr& sample) {
    ShiftedHashFamily fam;
    fam.side = side;
    fam.step = step;
    fam.offsets = offsets;
    fam.states.reserve(offsets.size());
    for (std::int64_t off : offsets) {
        fam.states.push_back(init_rolling_hash(s, ctx, sample, off));
        fam.symbols_hashed += sample->size();
    }
    return fam;
}

bool sorted_intersect(std::vector<std::uint64_t>& x, std::vector<std::uint64_t>& y) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (*i == *j) {
            return true;
        }
        if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

}  // namespace detail

ShiftedHashFamily process_a(const ByteString& a, std::int64_t k, const HashContextPtr& ctx,
                            const SamplePtr& sample) {
    const std::int64_t s = ceil_sqrt(k);
    std::vector<std::int64_t> offsets;
    for (std::int64_t t = -s; t <= s; ++t) {
        offsets.push_back(t * s);
    }
    return detail::build_family(a, Side::a, s, offsets, ctx, sample);
}

ShiftedHashFamily process_b(const ByteString& b, std::int64_t k, const HashContextPtr& ctx,
                            const SamplePtr& sample) {
    const std::int64_t s = ceil_sqrt(k);
    std::vector<std::int64_t> offsets;
    for (std::int64_t t = -s; t <= s; ++t) {
        offsets.push_back(-t);
    }
    return detail::build_family(b, Side::b, s, offsets, ctx, sample);
}

std::int64_t max_align(const ShiftedHashFamily& fam_a, const ShiftedHashFamily& fam_b,
                       std::int64_t i_b, std::int64_t k, std::int64_t n, OpCounters& counters) {
    std::int64_t d0 = std::min(2 * k, n - i_b + 1);
    std::int64_t d1 = n - i_b + 1;
    std::vector<std::uint64_t> la(fam_a.states.size()), lb(fam_b.states.size());
    while (d0 != d1) {
        const std::int64_t mid = d0 + (d1 - d0 + 1) / 2;
        for (std::size_t t = 0; t < fam_a.states.size(); ++t) {
            const std::int64_t off = fam_a.offsets[t];
            la[t] = fam_a.states[t].retrieve(i_b + k + off, i_b + mid - k - 1 + off);
        }
        for (std::size_t t = 0; t < fam_b.states.size(); ++t) {
            const std::int64_t off = fam_b.offsets[t];
            lb[t] = fam_b.states[t].retrieve(i_b + k + off, i_b + mid - k - 1 + off);
        }
        counters.hash_retrievals += static_cast<std::int64_t>(la.size() + lb.size());
        if (detail::sorted_intersect(la, lb)) {
            d0 = mid;
        } else {
            d1 = mid - 1;
        }
    }
    return d0;
}

GapRun gap_noprep(const ByteString& a, const ByteString& b, std::int64_t k, std::uint64_t seed,
                  bool record_trace) {
    if (k < 1) {
        throw std::invalid_argument("gap_noprep: k must be at least 1");
    }
    if (a.size() != b.size()) {
        throw std::invalid_argument("gap_noprep: |A| must equal |B|");
    }
    GapRun run;
    const std::int64_t n = a.size();
    if (n == 0) {
        run.result.verdict = Verdict::small;
        return run;
    }
    const HashConfig cfg = HashConfig::from_seed(seed);
    auto ctx = make_hash_context(cfg, n);
    auto sample = std::make_shared<const SampleSet>(draw_sample(n, k, false, cfg));
    run.sample_size = sample->size();
    const ShiftedHashFamily fa = process_a(a, k, ctx, sample);
    const ShiftedHashFamily fb = process_b(b, k, ctx, sample);
    const NoPrepMaxAlign oracle(fa, fb, k, n);
    run.result = greedy_match(a, b, k, oracle, record_trace);
    run.result.counters.symbols_hashed += fa.symbols_hashed + fb.symbols_hashed;
    return run;
}

}  // namespace gapedit
