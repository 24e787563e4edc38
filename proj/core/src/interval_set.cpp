#include "exm/interval_set.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace exm {

namespace {

// Boundary-flagged interval: the exact point set {x : lo <* x <* hi} with
// per-endpoint closures. Everything pointwise-exact routes through these.
struct Flagged {
    Rational lo, hi;
    bool lo_in = true, hi_in = true;

    bool empty() const {
        if (lo > hi) return true;
        if (lo == hi) return !(lo_in && hi_in);
        return false;
    }
};

std::pair<bool, bool> kind_flags(Kind k) {
    switch (k) {
        case Kind::closed: return {true, true};
        case Kind::open: return {false, false};
        case Kind::half_open: return {true, false};
    }
    throw std::logic_error("unreachable kind");
}

std::vector<Flagged> to_flagged(const IntervalSet& s) {
    auto [li, hi] = kind_flags(s.kind());
    std::vector<Flagged> out;
    out.reserve(s.intervals().size());
    for (const auto& [a, b] : s.intervals()) out.push_back({a, b, li, hi});
    return out;
}

// True when the union of two touching/overlapping flagged intervals is
// connected: they overlap, or they touch at a point that at least one
// side contains.
bool connects(const Flagged& a, const Flagged& b) {
    if (b.lo < a.hi) return true;
    if (b.lo == a.hi) return a.hi_in || b.lo_in;
    return false;
}

std::vector<Flagged> normalize(std::vector<Flagged> v) {
    std::erase_if(v, [](const Flagged& f) { return f.empty(); });
    std::sort(v.begin(), v.end(), [](const Flagged& a, const Flagged& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_in && !b.lo_in;
    });
    std::vector<Flagged> out;
    for (auto& f : v) {
        if (!out.empty() && connects(out.back(), f)) {
            Flagged& t = out.back();
            if (f.hi > t.hi) {
                t.hi = f.hi;
                t.hi_in = f.hi_in;
            } else if (f.hi == t.hi) {
                t.hi_in = t.hi_in || f.hi_in;
            }
        } else {
            out.push_back(f);
        }
    }
    return out;
}

std::vector<Flagged> flagged_intersect(const std::vector<Flagged>& a, const std::vector<Flagged>& b) {
    std::vector<Flagged> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            Flagged r;
            if (x.lo > y.lo) { r.lo = x.lo; r.lo_in = x.lo_in; }
            else if (x.lo < y.lo) { r.lo = y.lo; r.lo_in = y.lo_in; }
            else { r.lo = x.lo; r.lo_in = x.lo_in && y.lo_in; }
            if (x.hi < y.hi) { r.hi = x.hi; r.hi_in = x.hi_in; }
            else if (x.hi > y.hi) { r.hi = y.hi; r.hi_in = y.hi_in; }
            else { r.hi = x.hi; r.hi_in = x.hi_in && y.hi_in; }
            if (!r.empty()) out.push_back(r);
        }
    return normalize(std::move(out));
}

// x \ y as up to two pieces: the part strictly left of y and strictly
// right of y, clamped back into x.
void subtract_one(const Flagged& x, const Flagged& y, std::vector<Flagged>& out) {
    Flagged left{x.lo, y.lo, x.lo_in, !y.lo_in};
    if (left.hi > x.hi) { left.hi = x.hi; left.hi_in = x.hi_in; }
    else if (left.hi == x.hi) { left.hi_in = left.hi_in && x.hi_in; }

    Flagged right{y.hi, x.hi, !y.hi_in, x.hi_in};
    if (right.lo < x.lo) { right.lo = x.lo; right.lo_in = x.lo_in; }
    else if (right.lo == x.lo) { right.lo_in = right.lo_in && x.lo_in; }

    if (!left.empty()) out.push_back(left);
    if (!right.empty()) out.push_back(right);
}

std::vector<Flagged> flagged_diff(const std::vector<Flagged>& a, const std::vector<Flagged>& b) {
    std::vector<Flagged> cur = a;
    for (const auto& y : b) {
        std::vector<Flagged> next;
        for (const auto& x : cur) subtract_one(x, y, next);
        cur = std::move(next);
    }
    return normalize(std::move(cur));
}

// Rebuilds a kinded set from flagged intervals. With exact=true the flags
// must match the kind precisely (else a representation error); otherwise
// the endpoints are re-tagged measure-canonically and degenerate points
// outside closed kind are dropped.
IntervalSet from_flagged(Kind kind, const std::vector<Flagged>& v, bool exact) {
    auto [li, hi] = kind_flags(kind);
    std::vector<IntervalSet::Interval> ivs;
    for (const auto& f : v) {
        if (exact) {
            bool point_ok = kind == Kind::closed && f.lo == f.hi && f.lo_in && f.hi_in;
            if (!point_ok && (f.lo_in != li || f.hi_in != hi))
                throw std::domain_error("interval set: result not representable in kind " + kind_name(kind));
        }
        if (f.lo == f.hi && kind != Kind::closed) continue;  // measure-canonical drop
        ivs.emplace_back(f.lo, f.hi);
    }
    return IntervalSet(kind, std::move(ivs));
}

void require_same_kind(const IntervalSet& a, const IntervalSet& b, const char* op) {
    if (a.kind() != b.kind())
        throw std::domain_error(std::string("interval set: mixed kinds in ") + op +
                                " (use the mixed-intersection operation)");
}

}  // namespace

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::closed: return "closed";
        case Kind::open: return "open";
        case Kind::half_open: return "half_open";
    }
    throw std::logic_error("unreachable kind");
}

Kind kind_from_name(const std::string& name) {
    if (name == "closed") return Kind::closed;
    if (name == "open") return Kind::open;
    if (name == "half_open") return Kind::half_open;
    throw std::invalid_argument("unknown interval kind: '" + name + "'");
}

IntervalSet::IntervalSet(Kind kind, std::vector<Interval> intervals) : kind_(kind) {
    std::vector<Flagged> v;
    auto [li, hi_in] = kind_flags(kind);
    for (auto& [a, b] : intervals) {
        if (a > b)
            throw std::invalid_argument("interval set: lo > hi in [" + a.to_string() + ", " + b.to_string() + "]");
        if (a == b && kind != Kind::closed) continue;  // empty in open/half_open kinds
        v.push_back({a, b, li, hi_in});
    }
    for (const auto& f : normalize(std::move(v))) ivs_.emplace_back(f.lo, f.hi);
}

IntervalSet IntervalSet::single(Kind kind, Rational lo, Rational hi) {
    return IntervalSet(kind, {{std::move(lo), std::move(hi)}});
}

IntervalSet IntervalSet::closure() const {
    return IntervalSet(Kind::closed, ivs_);
}

IntervalSet IntervalSet::interior() const {
    return IntervalSet(Kind::open, ivs_);
}

IntervalSet IntervalSet::rekind(Kind k) const {
    return IntervalSet(k, ivs_);
}

std::string IntervalSet::to_string() const {
    if (ivs_.empty()) return "{}";
    auto [li, hi] = kind_flags(kind_);
    std::string out;
    for (std::size_t i = 0; i < ivs_.size(); ++i) {
        if (i) out += " u ";
        out += li ? "[" : "(";
        out += ivs_[i].first.to_string() + "," + ivs_[i].second.to_string();
        out += hi ? "]" : ")";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
    return os << s.to_string();
}

IntervalSet iset_union(const IntervalSet& a, const IntervalSet& b) {
    require_same_kind(a, b, "union");
    auto v = to_flagged(a);
    auto w = to_flagged(b);
    v.insert(v.end(), w.begin(), w.end());
    return from_flagged(a.kind(), normalize(std::move(v)), /*exact=*/true);
}

IntervalSet iset_intersect(const IntervalSet& a, const IntervalSet& b) {
    require_same_kind(a, b, "intersection");
    return from_flagged(a.kind(), flagged_intersect(to_flagged(a), to_flagged(b)), /*exact=*/true);
}

IntervalSet iset_diff(const IntervalSet& a, const IntervalSet& b) {
    require_same_kind(a, b, "difference");
    return from_flagged(a.kind(), flagged_diff(to_flagged(a), to_flagged(b)), /*exact=*/true);
}

IntervalSet iset_intersect_mixed(const IntervalSet& a, const IntervalSet& b) {
    return from_flagged(Kind::half_open, flagged_intersect(to_flagged(a), to_flagged(b)), /*exact=*/false);
}

ExtNonneg iset_length(const IntervalSet& a) {
    Rational total(0);
    for (const auto& [lo, hi] : a.intervals()) total += hi - lo;
    return ExtNonneg::finite(total);
}

IntervalSet iset_translate(const IntervalSet& a, const Rational& g, GroupLaw law) {
    std::vector<IntervalSet::Interval> out;
    if (law == GroupLaw::multiplicative) {
        if (g.sign() <= 0)
            throw std::domain_error("interval set: multiplicative translate by nonpositive " + g.to_string());
        for (const auto& [lo, hi] : a.intervals()) {
            if (lo.sign() <= 0)
                throw std::domain_error("interval set: multiplicative law needs positive endpoints");
            out.emplace_back(lo * g, hi * g);
        }
    } else {
        for (const auto& [lo, hi] : a.intervals()) out.emplace_back(lo + g, hi + g);
    }
    return IntervalSet(a.kind(), std::move(out));
}

IntervalSet iset_invert(const IntervalSet& a, GroupLaw law) {
    std::vector<IntervalSet::Interval> out;
    for (const auto& [lo, hi] : a.intervals()) {
        if (law == GroupLaw::multiplicative) {
            if (lo.sign() <= 0)
                throw std::domain_error("interval set: multiplicative law needs positive endpoints");
            out.emplace_back(Rational(1) / hi, Rational(1) / lo);
        } else {
            out.emplace_back(-hi, -lo);
        }
    }
    return IntervalSet(a.kind(), std::move(out));
}

IntervalSet iset_fatten(const IntervalSet& a, const Rational& eps) {
    if (eps.sign() <= 0) throw std::domain_error("fatten: eps must be positive");
    std::vector<IntervalSet::Interval> out;
    for (const auto& [lo, hi] : a.intervals()) out.emplace_back(lo - eps, hi + eps);
    return IntervalSet(Kind::open, std::move(out));
}

IntervalSet iset_shrink(const IntervalSet& a, const Rational& eps) {
    if (eps.sign() <= 0) throw std::domain_error("shrink: eps must be positive");
    std::vector<IntervalSet::Interval> out;
    for (const auto& [lo, hi] : a.intervals()) {
        if (hi - lo > eps + eps) out.emplace_back(lo + eps, hi - eps);
    }
    return IntervalSet(Kind::closed, std::move(out));
}

IntervalSet iset_sumset_open(const IntervalSet& a, const IntervalSet& b_open, GroupLaw law) {
    if (b_open.kind() != Kind::open)
        throw std::domain_error("sumset: second operand must be open");
    std::vector<IntervalSet::Interval> out;
    for (const auto& [alo, ahi] : a.intervals())
        for (const auto& [blo, bhi] : b_open.intervals()) {
            if (law == GroupLaw::multiplicative) {
                if (alo.sign() <= 0 || blo.sign() <= 0)
                    throw std::domain_error("sumset: multiplicative law needs positive endpoints");
                out.emplace_back(alo * blo, ahi * bhi);
            } else {
                out.emplace_back(alo + blo, ahi + bhi);
            }
        }
    return IntervalSet(Kind::open, std::move(out));
}

bool iset_member(const IntervalSet& a, const Rational& x) {
    auto [li, hi_in] = kind_flags(a.kind());
    for (const auto& [lo, hi] : a.intervals()) {
        if (lo == hi) {
            if (x == lo && li && hi_in) return true;
            continue;
        }
        bool above_lo = x > lo || (x == lo && li);
        bool below_hi = x < hi || (x == hi && hi_in);
        if (above_lo && below_hi) return true;
    }
    return false;
}

bool iset_subset(const IntervalSet& a, const IntervalSet& b) {
    return flagged_diff(to_flagged(a), to_flagged(b)).empty();
}

bool iset_disjoint(const IntervalSet& a, const IntervalSet& b) {
    return flagged_intersect(to_flagged(a), to_flagged(b)).empty();
}

namespace {
void require_closed(const IntervalSet& a, const char* op) {
    if (a.kind() != Kind::closed)
        throw std::domain_error(std::string("interval set: ") + op + " is defined for closed sets");
}
}  // namespace

std::optional<Rational> iset_min(const IntervalSet& a) {
    require_closed(a, "min");
    if (a.is_empty()) return std::nullopt;
    return a.intervals().front().first;
}

std::optional<Rational> iset_max(const IntervalSet& a) {
    require_closed(a, "max");
    if (a.is_empty()) return std::nullopt;
    return a.intervals().back().second;
}

std::optional<Rational> iset_min_geq(const IntervalSet& a, const Rational& t) {
    require_closed(a, "min_geq");
    for (const auto& [lo, hi] : a.intervals()) {
        if (t <= lo) return lo;
        if (t <= hi) return t;
    }
    return std::nullopt;
}

std::optional<Rational> iset_inf_gt(const IntervalSet& a, const Rational& t) {
    require_closed(a, "inf_gt");
    for (const auto& [lo, hi] : a.intervals()) {
        if (t < lo) return lo;
        if (t < hi) return t;  // points of (t, hi] accumulate at t
    }
    return std::nullopt;
}

std::optional<Rational> iset_max_leq(const IntervalSet& a, const Rational& t) {
    require_closed(a, "max_leq");
    std::optional<Rational> best;
    for (const auto& [lo, hi] : a.intervals()) {
        if (lo > t) break;
        best = hi <= t ? hi : t;
    }
    return best;
}

IntervalSet parse_interval_text(const std::string& text) {
    auto skip_ws = [&](std::size_t& i) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    std::size_t i = 0;
    skip_ws(i);
    if (i < text.size() && text.compare(i, 2, "{}") == 0) return IntervalSet::empty(Kind::half_open);

    std::optional<Kind> kind;
    std::vector<IntervalSet::Interval> ivs;
    while (i < text.size()) {
        skip_ws(i);
        if (i >= text.size()) break;
        char open_c = text[i];
        if (open_c != '[' && open_c != '(')
            throw std::invalid_argument("interval text: expected '[' or '(' in '" + text + "'");
        ++i;
        auto comma = text.find(',', i);
        if (comma == std::string::npos) throw std::invalid_argument("interval text: missing ',' in '" + text + "'");
        auto close = text.find_first_of("])", comma);
        if (close == std::string::npos)
            throw std::invalid_argument("interval text: missing closing bracket in '" + text + "'");
        char close_c = text[close];
        auto trim = [](std::string s) {
            while (!s.empty() && s.front() == ' ') s.erase(s.begin());
            while (!s.empty() && s.back() == ' ') s.pop_back();
            return s;
        };
        Rational lo = Rational::parse(trim(text.substr(i, comma - i)));
        Rational hi = Rational::parse(trim(text.substr(comma + 1, close - comma - 1)));
        Kind k;
        if (open_c == '[' && close_c == ']') k = Kind::closed;
        else if (open_c == '[' && close_c == ')') k = Kind::half_open;
        else if (open_c == '(' && close_c == ')') k = Kind::open;
        else throw std::invalid_argument("interval text: unsupported bracket pair in '" + text + "'");
        if (kind && *kind != k)
            throw std::invalid_argument("interval text: mixed kinds in one union: '" + text + "'");
        kind = k;
        ivs.emplace_back(std::move(lo), std::move(hi));
        i = close + 1;
        skip_ws(i);
        if (i < text.size()) {
            if (text[i] == 'u' || text[i] == 'U') ++i;
            else throw std::invalid_argument("interval text: expected 'u' between components in '" + text + "'");
        }
    }
    if (!kind) throw std::invalid_argument("interval text: empty input");
    return IntervalSet(*kind, std::move(ivs));
}

}  // namespace exm
