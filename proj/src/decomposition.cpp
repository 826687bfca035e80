#include "gapedit/decomposition.hpp"

#include <sstream>
#include <stdexcept>

#include "gapedit/edit_distance.hpp"

namespace gapedit {

namespace {

// Matched pairs always share a list index while replaying, which keeps the
// matching monotone for free.
struct Replay {
    std::vector<Interval> a;
    std::vector<Interval> b;
    std::vector<bool> matched;

    std::size_t locate_b(const EditOp& op) const {
        const std::int64_t p = op.position;
        for (std::size_t t = 0; t < b.size(); ++t) {
            const Interval& iv = b[t];
            if (op.kind == EditKind::insert) {
                // Between two intervals the left one takes the insertion.
                if (iv.start < p && p <= iv.end) {
                    return t;
                }
            } else if (iv.start <= p && p < iv.end) {
                return t;
            }
        }
        if (op.kind == EditKind::insert && p == 1 && !b.empty()) {
            return 0;
        }
        throw std::logic_error("decompose: edit position not covered by any interval");
    }

    void apply(const EditOp& op) {
        const std::size_t t = locate_b(op);
        const Interval iv = b[t];
        const std::int64_t p = op.position;
        std::int64_t delta = 0;
        Interval mid_b{p, p + 1};
        Interval after_b{p + 1, iv.end};
        if (op.kind == EditKind::erase) {
            mid_b = {p, p};
            after_b = {p, iv.end - 1};
            delta = -1;
        } else if (op.kind == EditKind::insert) {
            after_b = {p + 1, iv.end + 1};
            delta = +1;
        }
        const Interval before_b{iv.start, p};

        for (std::size_t u = t + 1; u < b.size(); ++u) {
            b[u].start += delta;
            b[u].end += delta;
        }
        b[t] = before_b;
        b.insert(b.begin() + static_cast<std::ptrdiff_t>(t) + 1, {mid_b, after_b});

        if (matched[t]) {
            const Interval ia = a[t];
            const std::int64_t cut = ia.start + (p - iv.start);
            const Interval mid_a = op.kind == EditKind::insert ? Interval{cut, cut} : Interval{cut, cut + 1};
            a[t] = {ia.start, cut};
            a.insert(a.begin() + static_cast<std::ptrdiff_t>(t) + 1, {mid_a, Interval{mid_a.end, ia.end}});
            matched.insert(matched.begin() + static_cast<std::ptrdiff_t>(t) + 1, {false, true});
        } else {
            const std::int64_t e = a[t].end;
            a.insert(a.begin() + static_cast<std::ptrdiff_t>(t) + 1, {Interval{e, e}, Interval{e, e}});
            matched.insert(matched.begin() + static_cast<std::ptrdiff_t>(t) + 1, {false, false});
        }
    }
};

bool substrings_equal(const ByteString& a, Interval ia, const ByteString& b, Interval ib) {
    if (ia.length() != ib.length()) {
        return false;
    }
    for (std::int64_t d = 0; d < ia.length(); ++d) {
        if (a.at(ia.start + d) != b.at(ib.start + d)) {
            return false;
        }
    }
    return true;
}

std::string check_partition(const std::vector<Interval>& parts, std::int64_t length, const char* name) {
    std::int64_t expected = 1;
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (parts[t].start != expected || parts[t].end < parts[t].start) {
            std::ostringstream os;
            os << name << " interval " << t << " is not contiguous";
            return os.str();
        }
        expected = parts[t].end;
    }
    if (expected != length + 1) {
        return std::string(name) + " intervals do not cover the string";
    }
    return {};
}

}  // namespace

Decomposition decompose(const ByteString& a, const ByteString& b, std::int64_t k) {
    if (k < 0) {
        throw std::invalid_argument("decompose: k must be nonnegative");
    }
    const EditScript script = optimal_edit_script(a, b);
    if (static_cast<std::int64_t>(script.ops.size()) > k) {
        throw std::invalid_argument("decompose: ED(A, B) exceeds k");
    }
    Replay r;
    r.a = {Interval{1, a.size() + 1}};
    r.b = {Interval{1, a.size() + 1}};
    r.matched = {true};
    for (const EditOp& op : script.ops) {
        r.apply(op);
    }

    Decomposition dec;
    const auto total = static_cast<std::size_t>(2 * k + 1);
    dec.intervals_a = std::move(r.a);
    dec.intervals_b = std::move(r.b);
    dec.intervals_a.resize(total, Interval{a.size() + 1, a.size() + 1});
    dec.intervals_b.resize(total, Interval{b.size() + 1, b.size() + 1});
    dec.matching.assign(total, Decomposition::kUnmatched);
    for (std::size_t t = 0; t < r.matched.size(); ++t) {
        if (r.matched[t]) {
            dec.matching[t] = static_cast<std::int64_t>(t);
        }
    }
    return dec;
}

std::string check_decomposition(const ByteString& a, const ByteString& b, std::int64_t k,
                                const Decomposition& dec) {
    const std::size_t limit = static_cast<std::size_t>(2 * k + 1);
    if (dec.intervals_a.size() > limit || dec.intervals_b.size() > limit) {
        return "more than 2k+1 intervals";
    }
    if (dec.matching.size() != dec.intervals_a.size()) {
        return "matching size differs from the number of A intervals";
    }
    if (auto err = check_partition(dec.intervals_a, a.size(), "A"); !err.empty()) {
        return err;
    }
    if (auto err = check_partition(dec.intervals_b, b.size(), "B"); !err.empty()) {
        return err;
    }

    std::vector<bool> b_used(dec.intervals_b.size(), false);
    std::int64_t last = -1;
    for (std::size_t i = 0; i < dec.matching.size(); ++i) {
        const std::int64_t j = dec.matching[i];
        const Interval ia = dec.intervals_a[i];
        if (j == Decomposition::kUnmatched) {
            if (ia.length() > 1) {
                return "unmatched A interval " + std::to_string(i) + " is longer than 1";
            }
            continue;
        }
        if (j < 0 || j >= static_cast<std::int64_t>(dec.intervals_b.size())) {
            return "matching points outside the B intervals";
        }
        if (j <= last) {
            return "matching is not monotone";
        }
        last = j;
        b_used[static_cast<std::size_t>(j)] = true;
        const Interval ib = dec.intervals_b[static_cast<std::size_t>(j)];
        if (!substrings_equal(a, ia, b, ib)) {
            return "matched pair " + std::to_string(i) + " differs";
        }
        if (std::abs(ia.start - ib.start) > k) {
            return "matched pair " + std::to_string(i) + " is shifted by more than k";
        }
    }
    for (std::size_t j = 0; j < dec.intervals_b.size(); ++j) {
        if (!b_used[j] && dec.intervals_b[j].length() > 1) {
            return "unmatched B interval " + std::to_string(j) + " is longer than 1";
        }
    }
    return {};
}

}  // namespace gapedit
