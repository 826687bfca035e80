#include "gapedit/greedy_wave.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gapedit/alignment_oracles.hpp"
#include "gapedit/edit_distance.hpp"

namespace gapedit {

std::int64_t round_to_multiple(std::int64_t x, std::int64_t l) {
    const std::int64_t below = floor_div(x, l) * l;
    const std::int64_t above = below == x ? x : below + l;
    return (x - below <= above - x) ? below : above;
}

std::int64_t BruteForceShiftAlign::query(std::int64_t i_a, std::int64_t i_b, OpCounters& counters) const {
    ++counters.oracle_queries;
    return max_shift_alignment_bruteforce(a_, b_, i_a, i_b, l_);
}

std::int64_t LceShiftAlign::query(std::int64_t i_a, std::int64_t i_b, OpCounters& counters) const {
    ++counters.oracle_queries;
    return longest_common_extension(a_, i_a, b_, i_b);
}

WaveResult greedy_wave(const ByteString& a, const ByteString& b, std::int64_t k, std::int64_t l,
                       const MaxShiftAlignOracle& oracle) {
    if (l < 1 || l > k) {
        throw std::invalid_argument("greedy_wave: need 1 <= l <= k");
    }
    if (a.size() != b.size()) {
        throw std::invalid_argument("greedy_wave: |A| must equal |B|");
    }
    const std::int64_t n = a.size();
    WaveResult r;
    WaveTable& t = r.table;
    t.k = k;
    t.l = l;
    t.m = k / l;
    const std::int64_t cols = t.columns();
    t.h.assign(static_cast<std::size_t>((k + 1) * cols), kNegInf);
    t.move.assign(t.h.size(), WaveMove::none);
    t.h[t.slot(0, 0)] = 0;
    t.move[t.slot(0, 0)] = WaveMove::start;

    for (std::int64_t i = 1; i <= k; ++i) {
        const std::int64_t* prev = t.h.data() + (i - 1) * cols;
        std::int64_t* cur = t.h.data() + i * cols;
        WaveMove* mv = t.move.data() + i * cols;
        for (std::int64_t c = 0; c < cols; ++c) {
            const std::int64_t j = (c - t.m) * l;
            std::int64_t best = wave_add(prev[c], l);
            WaveMove how = best == kNegInf ? WaveMove::none : WaveMove::stay;
            if (c - 1 >= 0 && wave_add(prev[c - 1], l) > best) {
                best = prev[c - 1] + l;
                how = WaveMove::from_below;
            }
            if (c + 1 < cols && wave_add(prev[c + 1], l) > best) {
                best = prev[c + 1] + l;
                how = WaveMove::from_above;
            }
            if (prev[c] != kNegInf) {
                const std::int64_t i_a = prev[c] + 1;
                const std::int64_t i_b = prev[c] + j + 1;
                // No oracle call without a position to align from.
                if (i_a >= 1 && i_a <= n && i_b >= 1 && i_b <= n) {
                    const std::int64_t d = oracle.query(i_a, i_b, r.counters);
                    if (prev[c] + d > best) {
                        best = prev[c] + d;
                        how = WaveMove::oracle;
                    }
                }
            }
            cur[c] = best;
            mv[c] = how;
        }
    }
    r.verdict = t.at(k, 0) >= n ? Verdict::small : Verdict::large;
    return r;
}

WaveCertificate certify_wave(const ByteString& a, const ByteString& b, const WaveTable& table) {
    WaveCertificate cert;
    cert.budget = 10 * table.k * table.l;
    const std::int64_t n = a.size();
    if (table.at(table.k, 0) == kNegInf) {
        return cert;
    }
    // Path of (h, j) from (k, 0) back to (0, 0).
    std::vector<std::pair<std::int64_t, std::int64_t>> path;
    std::int64_t j = 0;
    for (std::int64_t i = table.k; i >= 0; --i) {
        path.emplace_back(table.at(i, j), j);
        switch (table.move[table.slot(i, j)]) {
            case WaveMove::from_below:
                j -= table.l;
                break;
            case WaveMove::from_above:
                j += table.l;
                break;
            case WaveMove::none:
                throw std::logic_error("certify_wave: path reaches an unset cell");
            default:
                break;
        }
    }
    std::reverse(path.begin(), path.end());
    std::int64_t prev_a = 0, prev_b = 0;
    for (const auto& [h, jj] : path) {
        const std::int64_t cut_a = std::clamp<std::int64_t>(h, 0, n);
        const std::int64_t cut_b = std::clamp<std::int64_t>(h + jj, 0, b.size());
        cert.bound += edit_distance_exact(a.slice(prev_a + 1, cut_a), b.slice(prev_b + 1, cut_b));
        prev_a = std::max(prev_a, cut_a);
        prev_b = std::max(prev_b, cut_b);
    }
    cert.bound += edit_distance_exact(a.slice(prev_a + 1, n), b.slice(prev_b + 1, b.size()));
    cert.within_budget = cert.bound <= cert.budget;
    return cert;
}

std::int64_t count_jump_violations(const WaveTable& table) {
    std::int64_t violations = 0;
    const std::int64_t cols = table.columns();
    for (std::int64_t i = 0; i <= table.k; ++i) {
        for (std::int64_t c = 0; c < cols; ++c) {
            const std::int64_t base = table.h[static_cast<std::size_t>(i * cols + c)];
            if (base == kNegInf) {
                continue;
            }
            for (std::int64_t i2 = i; i2 <= table.k; ++i2) {
                const std::int64_t reach = i2 - i;  // |j' - j| <= l (i' - i) in column units
                for (std::int64_t c2 = std::max<std::int64_t>(0, c - reach);
                     c2 <= std::min(cols - 1, c + reach); ++c2) {
                    const std::int64_t v = table.h[static_cast<std::size_t>(i2 * cols + c2)];
                    if (v == kNegInf || v < base + table.l * (i2 - i)) {
                        ++violations;
                    }
                }
            }
        }
    }
    return violations;
}

ShiftedHashFamily process_a_wave(const ByteString& a, std::int64_t l, std::int64_t k,
                                 const HashContextPtr& ctx, const SamplePtr& sample) {
    (void)l;
    const std::int64_t s = ceil_sqrt(k);
    std::vector<std::int64_t> offsets;
    for (std::int64_t t = -2 * s; t <= 2 * s; ++t) {
        offsets.push_back(t * s);
    }
    return detail::build_family(a, Side::a, s, offsets, ctx, sample);
}

std::int64_t max_shift_align_noprep(const ShiftedHashFamily& fam_a, const ShiftedHashFamily& fam_b,
                                    std::int64_t i_a, std::int64_t i_b, std::int64_t k,
                                    std::int64_t l, std::int64_t n, OpCounters& counters) {
    const std::int64_t s = fam_a.step;
    const std::int64_t a_lo = std::max(floor_div(i_a - i_b - l, s), -2 * s);
    const std::int64_t a_hi = std::min(ceil_div(i_a - i_b + l, s), 2 * s);
    (void)k;
    std::int64_t d0 = std::min(2 * l, n - i_b + 1);
    std::int64_t d1 = n - i_b + 1;
    std::vector<std::uint64_t> la, lb(fam_b.states.size());
    while (d0 != d1) {
        const std::int64_t mid = d0 + (d1 - d0 + 1) / 2;
        la.clear();
        for (std::int64_t t = a_lo; t <= a_hi; ++t) {
            const auto& st = fam_a.states[static_cast<std::size_t>(t + 2 * s)];
            const std::int64_t off = t * s;
            la.push_back(st.retrieve(i_b + l + off, i_b + mid - l - 1 + off));
        }
        for (std::size_t t = 0; t < fam_b.states.size(); ++t) {
            const std::int64_t off = fam_b.offsets[t];
            lb[t] = fam_b.states[t].retrieve(i_b + l + off, i_b + mid - l - 1 + off);
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

OneSidedIndex one_sided_preprocess_wave(const ByteString& a, std::int64_t l, std::int64_t k,
                                        const HashConfig& cfg, const SamplePtr& sample) {
    if (l < 1 || l > k) {
        throw std::invalid_argument("one_sided_preprocess_wave: need 1 <= l <= k");
    }
    return build_shift_tables(a, IndexKind::wave, k, l, cfg, sample);
}

OneSidedIndex one_sided_preprocess_wave(const ByteString& a, std::int64_t l, std::int64_t k,
                                        const HashConfig& cfg) {
    if (a.size() < 1 || l < 1 || l > k) {
        throw std::invalid_argument("one_sided_preprocess_wave: need nonempty A and 1 <= l <= k");
    }
    auto sample = std::make_shared<const SampleSet>(draw_sample(a.size(), l, true, cfg));
    return one_sided_preprocess_wave(a, l, k, cfg, sample);
}

std::int64_t one_sided_max_shift_align(const OneSidedIndex& idx, const RollingHashState& h_b,
                                       std::int64_t i_a, std::int64_t i_b, OpCounters& counters) {
    const std::int64_t n = idx.n();
    const std::int64_t l = idx.granularity();
    const std::int64_t col = i_b / l;
    const std::int64_t shift_col = floor_div(i_a - i_b, l);
    for (std::int64_t e = idx.levels() - 1; e >= 0; --e) {
        const std::int64_t d = std::int64_t{1} << e;
        if (i_b + d - 1 > n) {
            continue;
        }
        const std::uint64_t h = h_b.retrieve(i_b, i_b + d - 1);
        ++counters.hash_retrievals;
        ++counters.table_lookups;
        if (idx.contains(e, col, shift_col, h)) {
            return d;
        }
    }
    return 0;
}

void validate_wave_parameters(std::int64_t n, std::int64_t k, std::int64_t l, WaveMode mode) {
    if (l < 1 || l > k) {
        throw std::invalid_argument("wave: need 1 <= l <= k (got k = " + std::to_string(k) +
                                    ", l = " + std::to_string(l) + ")");
    }
    if (k > n) {
        throw std::invalid_argument("wave: need k <= n (got k = " + std::to_string(k) +
                                    ", n = " + std::to_string(n) + ")");
    }
    if (mode == WaveMode::noprep && l < ceil_sqrt(k)) {
        throw std::invalid_argument("wave: noprep mode needs l >= ceil(sqrt(k)) = " +
                                    std::to_string(ceil_sqrt(k)));
    }
}

WaveRun gap_wave_indexed(const OneSidedIndex& idx, const ByteString& a, const ByteString& b,
                         WaveMode mode) {
    if (idx.kind() != IndexKind::wave) {
        throw std::invalid_argument("gap_wave_indexed: index was built for the gap variant");
    }
    if (mode == WaveMode::noprep) {
        throw std::invalid_argument("gap_wave_indexed: noprep mode does not use an index");
    }
    if (a.size() != idx.n() || b.size() != idx.n()) {
        throw std::invalid_argument("gap_wave_indexed: string lengths must match the index");
    }
    validate_wave_parameters(idx.n(), idx.k(), idx.granularity(), mode);
    WaveRun run;
    run.sample_size = idx.sample()->size();
    run.preprocess_ops = idx.preprocess_ops();
    const RollingHashState h_b = one_sided_process_b(idx, b);
    if (mode == WaveMode::two_sided) {
        run.preprocess_ops += idx.sample()->size();
    }
    const IndexedMaxShiftAlign oracle(idx, h_b);
    run.result = greedy_wave(a, b, idx.k(), idx.granularity(), oracle);
    if (mode == WaveMode::one_sided) {
        run.result.counters.symbols_hashed += idx.sample()->size();
    }
    return run;
}

WaveRun gap_wave(const ByteString& a, const ByteString& b, std::int64_t k, std::int64_t l,
                 WaveMode mode, std::uint64_t seed) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("gap_wave: |A| must equal |B|");
    }
    const std::int64_t n = a.size();
    validate_wave_parameters(n, k, l, mode);
    const HashConfig cfg = HashConfig::from_seed(seed);
    if (mode != WaveMode::noprep) {
        const OneSidedIndex idx = one_sided_preprocess_wave(a, l, k, cfg);
        return gap_wave_indexed(idx, a, b, mode);
    }
    WaveRun run;
    auto ctx = make_hash_context(cfg, n);
    auto sample = std::make_shared<const SampleSet>(draw_sample(n, l, false, cfg));
    run.sample_size = sample->size();
    const ShiftedHashFamily fa = process_a_wave(a, l, k, ctx, sample);
    const ShiftedHashFamily fb = process_b(b, k, ctx, sample);
    const NoPrepMaxShiftAlign oracle(fa, fb, k, l, n);
    run.result = greedy_wave(a, b, k, l, oracle);
    run.result.counters.symbols_hashed += fa.symbols_hashed + fb.symbols_hashed;
    return run;
}

}  // namespace gapedit
