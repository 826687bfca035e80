#include "gapedit/edit_distance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gapedit {

std::int64_t edit_distance_quadratic(std::span<const Symbol> a, std::span<const Symbol> b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::int64_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        prev[j] = static_cast<std::int64_t>(j);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<std::int64_t>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            std::int64_t sub = prev[j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0);
            cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

std::int64_t edit_distance_banded(std::span<const Symbol> a, std::span<const Symbol> b,
                                  std::int64_t t) {
    if (t < 0) {
        return 0;  // every distance exceeds a negative band; t + 1 == 0 by contract
    }
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t m = static_cast<std::int64_t>(b.size());
    const std::int64_t cap = t + 1;
    if (std::abs(n - m) > t) {
        return cap;
    }
    // Values are clamped at cap, so int32 suffices for any t < 2^31.
    const std::int32_t inf = static_cast<std::int32_t>(std::min<std::int64_t>(cap, 1LL << 30));
    std::vector<std::int32_t> prev(static_cast<std::size_t>(m + 2), inf);
    std::vector<std::int32_t> cur(static_cast<std::size_t>(m + 2), inf);
    for (std::int64_t j = 0; j <= std::min(m, t); ++j) {
        prev[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(j);
    }
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t lo = std::max<std::int64_t>(0, i - t);
        const std::int64_t hi = std::min(m, i + t);
        if (lo > 0) {
            cur[static_cast<std::size_t>(lo - 1)] = inf;
        }
        const Symbol ai = a[static_cast<std::size_t>(i - 1)];
        for (std::int64_t j = lo; j <= hi; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            std::int32_t best = prev[ju] + 1;
            if (j > 0) {
                best = std::min(best, cur[ju - 1] + 1);
                best = std::min(best, prev[ju - 1] + (ai != b[ju - 1] ? 1 : 0));
            } else {
                best = std::min(best, static_cast<std::int32_t>(i));
            }
            cur[ju] = std::min(best, inf);
        }
        std::swap(prev, cur);
    }
    return std::min<std::int64_t>(prev[static_cast<std::size_t>(m)], cap);
}

std::int64_t edit_distance_exact(std::span<const Symbol> a, std::span<const Symbol> b) {
    const std::int64_t bound = static_cast<std::int64_t>(std::max(a.size(), b.size()));
    for (std::int64_t t = 1;; t *= 2) {
        const std::int64_t band = std::min(t, bound);
        const std::int64_t d = edit_distance_banded(a, b, band);
        if (d <= band) {
            return d;
        }
    }
}

std::int64_t edit_distance_exact(const ByteString& a, const ByteString& b) {
    return edit_distance_exact(a.symbols(), b.symbols());
}

bool exact_hwave(const ByteString& a, const ByteString& b, std::int64_t k) {
    if (k < 0) {
        throw std::invalid_argument("exact_hwave: k must be nonnegative");
    }
    const std::int64_t n = a.size(), m = b.size();
    const std::int64_t target = n - m;  // diagonal j: B prefix length is h - j
    if (std::abs(target) > k) {
        return false;
    }
    constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
    const auto width = static_cast<std::size_t>(2 * k + 1);
    auto slot = [k](std::int64_t j) { return static_cast<std::size_t>(j + k); };
    auto slide = [&](std::int64_t h, std::int64_t j) {
        h = std::min(h, std::min(n, m + j));
        return h + longest_common_extension(a, h + 1, b, h - j + 1);
    };

    std::vector<std::int64_t> prev(width, kNegInf), cur(width, kNegInf);
    prev[slot(0)] = slide(0, 0);
    for (std::int64_t i = 1; i <= k && prev[slot(target)] < n; ++i) {
        for (std::int64_t j = -k; j <= k; ++j) {
            std::int64_t best = kNegInf;
            if (prev[slot(j)] != kNegInf) {
                best = prev[slot(j)] + 1;  // substitution
            }
            if (j - 1 >= -k && prev[slot(j - 1)] != kNegInf) {
                best = std::max(best, prev[slot(j - 1)] + 1);  // drop a symbol of A
            }
            if (j + 1 <= k && prev[slot(j + 1)] != kNegInf) {
                best = std::max(best, prev[slot(j + 1)]);  // take a symbol of B
            }
            cur[slot(j)] = best == kNegInf ? kNegInf : slide(best, j);
        }
        std::swap(prev, cur);
    }
    return prev[slot(target)] >= n;
}

EditScript optimal_edit_script(const ByteString& a, const ByteString& b) {
    const auto sa = a.symbols();
    const auto sb = b.symbols();
    const std::int64_t n = a.size(), m = b.size();
    const std::int64_t t = edit_distance_exact(sa, sb);
    const std::int64_t w = 2 * t + 1;
    constexpr std::int64_t kInf = std::numeric_limits<std::int32_t>::max() / 2;

    // Banded matrix: cell (i, j) with |i - j| <= t stored at i * w + (j - i + t).
    std::vector<std::int32_t> d(static_cast<std::size_t>((n + 1) * w), static_cast<std::int32_t>(kInf));
    auto in_band = [&](std::int64_t i, std::int64_t j) {
        return j >= 0 && j <= m && i >= 0 && i <= n && std::abs(i - j) <= t;
    };
    auto at = [&](std::int64_t i, std::int64_t j) -> std::int32_t& {
        return d[static_cast<std::size_t>(i * w + (j - i + t))];
    };
    auto get = [&](std::int64_t i, std::int64_t j) -> std::int64_t {
        return in_band(i, j) ? at(i, j) : kInf;
    };
    for (std::int64_t i = 0; i <= n; ++i) {
        for (std::int64_t j = std::max<std::int64_t>(0, i - t); j <= std::min(m, i + t); ++j) {
            std::int64_t best;
            if (i == 0) {
                best = j;
            } else if (j == 0) {
                best = i;
            } else {
                best = get(i - 1, j - 1) + (sa[i - 1] != sb[j - 1] ? 1 : 0);
                best = std::min({best, get(i - 1, j) + 1, get(i, j - 1) + 1});
            }
            at(i, j) = static_cast<std::int32_t>(std::min(best, kInf));
        }
    }

    EditScript script;
    std::int64_t i = n, j = m;
    while (i > 0 || j > 0) {
        const std::int64_t here = get(i, j);
        if (i > 0 && j > 0 && here == get(i - 1, j - 1) + (sa[i - 1] != sb[j - 1] ? 1 : 0)) {
            if (sa[i - 1] != sb[j - 1]) {
                script.ops.push_back({EditKind::substitute, i, sb[j - 1]});
            }
            --i;
            --j;
        } else if (i > 0 && here == get(i - 1, j) + 1) {
            script.ops.push_back({EditKind::erase, i, 0});
            --i;
        } else {
            script.ops.push_back({EditKind::insert, i + 1, sb[j - 1]});
            --j;
        }
    }
    return script;
}

ByteString apply_edit_script(const ByteString& source, const EditScript& script) {
    std::vector<Symbol> s(source.symbols().begin(), source.symbols().end());
    for (const EditOp& op : script.ops) {
        const auto size = static_cast<std::int64_t>(s.size());
        switch (op.kind) {
            case EditKind::insert:
                if (op.position < 1 || op.position > size + 1) {
                    throw std::out_of_range("apply_edit_script: insert position out of range");
                }
                s.insert(s.begin() + (op.position - 1), op.symbol);
                break;
            case EditKind::erase:
                if (op.position < 1 || op.position > size) {
                    throw std::out_of_range("apply_edit_script: erase position out of range");
                }
                s.erase(s.begin() + (op.position - 1));
                break;
            case EditKind::substitute:
                if (op.position < 1 || op.position > size) {
                    throw std::out_of_range("apply_edit_script: substitute position out of range");
                }
                s[static_cast<std::size_t>(op.position - 1)] = op.symbol;
                break;
        }
    }
    return ByteString(std::move(s));
}

}  // namespace gapedit
