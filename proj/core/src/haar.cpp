#include "exm/haar.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace exm {

EpsSchedule EpsSchedule::dyadic(int k_max) {
    if (k_max < 1) throw std::domain_error("EpsSchedule: k_max must be >= 1");
    return EpsSchedule{k_max};
}

Rational EpsSchedule::eps(int j) const {
    if (j < 1 || j > k_max) throw std::domain_error("EpsSchedule: index out of range");
    return Rational(1, 2).pow(j);
}

namespace {

// ---------------------------------------------------------------------
// Greedy window covers on the ordered carriers.
//
// Exchange argument: order any cover's windows by position; the window
// covering the leftmost point can be slid right until it is anchored
// there without uncovering anything, and induction on the remaining
// suffix does the rest. So the greedy count anchored at the leftmost
// uncovered point is minimal among half-open (resp. closed) window
// covers. For open V the half-open count and the open-translate minimum
// coincide: an open window is contained in its half-open hull (>=), and
// the greedy half-open cover turns into an open cover of equal count by
// shifting window i left by delta*(i+1) for small enough delta (<=).
// ---------------------------------------------------------------------

struct GreedyCover {
    long long count = 0;
    std::vector<Rational> anchors;  // window start x_i
    std::vector<Rational> margins;  // reach_i - max(K cap [x_i, reach_i]); 0 in the touching case
};

GreedyCover greedy_cover(const IntervalSet& K, const Rational& step, GroupLaw law, bool half_open) {
    GreedyCover out;
    auto cur = iset_min(K);
    while (cur) {
        const Rational x = *cur;
        Rational reach = law == GroupLaw::additive ? x + step : x * step;
        out.anchors.push_back(x);
        ++out.count;
        auto m = iset_max_leq(K, reach);
        out.margins.push_back(law == GroupLaw::additive ? reach - *m : reach / *m - Rational(1));
        cur = half_open ? iset_min_geq(K, reach) : iset_inf_gt(K, reach);
    }
    return out;
}

IntervalSet windows_from_anchors(const std::vector<Rational>& starts, const Rational& v_lo,
                                 const Rational& v_hi, GroupLaw law, Kind kind) {
    std::vector<IntervalSet::Interval> ivs;
    for (const Rational& s : starts) {
        if (law == GroupLaw::additive)
            ivs.emplace_back(s, s + (v_hi - v_lo));
        else
            ivs.emplace_back(s, s * (v_hi / v_lo));
    }
    return IntervalSet(kind, std::move(ivs));
}

std::vector<Element> anchors_to_elements(const std::vector<Rational>& starts, const Rational& v_lo,
                                         GroupLaw law) {
    std::vector<Element> out;
    out.reserve(starts.size());
    for (const Rational& s : starts)
        out.push_back(law == GroupLaw::additive ? s - v_lo : s / v_lo);
    return out;
}

IndexResult index_continuous(const GroupSpec& G, const IntervalSet& K, const IntervalSet& V,
                             bool v_open) {
    if (V.component_count() != 1)
        throw std::domain_error("index: covering sets with multiple components are not supported "
                                "on continuous carriers");
    const GroupLaw law = G.law();
    const auto& [v_lo, v_hi] = V.intervals().front();
    Rational step = law == GroupLaw::additive ? v_hi - v_lo : v_hi / v_lo;
    if (law == GroupLaw::additive ? step.sign() <= 0 : step <= Rational(1))
        throw std::domain_error("index: covering window has empty interior");

    GreedyCover g = greedy_cover(K, step, law, v_open);
    IndexResult result;
    result.count = g.count;

    if (!v_open) {
        result.witness = anchors_to_elements(g.anchors, v_lo, law);
        IntervalSet cover = windows_from_anchors(g.anchors, v_lo, v_hi, law, Kind::closed);
        if (!iset_subset(K, cover))
            throw std::logic_error("index: closed witness cover failed verification");
        return result;
    }

    // Open windows: shift window i left by (i+1)*delta. delta stays below
    // every positive margin and below the window size, so nothing on the
    // right is lost; strictly increasing shifts keep consecutive touching
    // windows overlapping.
    Rational delta = law == GroupLaw::additive ? step : step - Rational(1);
    for (const Rational& m : g.margins)
        if (m.sign() > 0) delta = min(delta, m);
    delta = delta / Rational(2 * (g.count + 1));

    for (int attempt = 0; attempt < 60; ++attempt) {
        std::vector<Rational> starts;
        starts.reserve(g.anchors.size());
        for (std::size_t i = 0; i < g.anchors.size(); ++i) {
            Rational shift = delta * Rational(static_cast<long long>(i) + 1);
            starts.push_back(law == GroupLaw::additive ? g.anchors[i] - shift
                                                       : g.anchors[i] / (Rational(1) + shift));
        }
        IntervalSet cover = windows_from_anchors(starts, v_lo, v_hi, law, Kind::open);
        if (iset_subset(K, cover)) {
            result.witness = anchors_to_elements(starts, v_lo, law);
            return result;
        }
        delta = delta / Rational(2);
    }
    throw std::logic_error("index: open witness cover failed verification");
}

// Exact minimum set cover for the discrete carriers, branch and bound on
// the first uncovered element.
struct CoverSearch {
    int n_elems = 0;
    int blocks = 0;
    std::vector<std::vector<std::uint64_t>> masks;      // per candidate
    std::vector<std::vector<int>> candidates_for_elem;  // per element
    long long nodes = 0;

    bool covered(const std::vector<std::uint64_t>& u, int e) const {
        return !((u[e / 64] >> (e % 64)) & 1u);
    }

    void search(std::vector<std::uint64_t>& uncovered, int uncovered_count, int depth,
                std::vector<int>& chosen, int& best, std::vector<int>& best_chosen) {
        if (uncovered_count == 0) {
            if (depth < best) {
                best = depth;
                best_chosen = chosen;
            }
            return;
        }
        if (++nodes > 20'000'000)
            throw std::domain_error("index: exact cover search exceeded the supported size");
        int max_cover = 1;
        for (const auto& m : masks) {
            int c = 0;
            for (int b = 0; b < blocks; ++b) c += std::popcount(m[b] & uncovered[b]);
            max_cover = std::max(max_cover, c);
        }
        if (depth + (uncovered_count + max_cover - 1) / max_cover >= best) return;
        int e = 0;
        while (covered(uncovered, e)) ++e;
        for (int cand : candidates_for_elem[e]) {
            std::vector<std::uint64_t> next = uncovered;
            int removed = 0;
            for (int b = 0; b < blocks; ++b) {
                removed += std::popcount(next[b] & masks[cand][b]);
                next[b] &= ~masks[cand][b];
            }
            chosen.push_back(cand);
            search(next, uncovered_count - removed, depth + 1, chosen, best, best_chosen);
            chosen.pop_back();
        }
    }
};

IndexResult solve_cover(int n_elems, const std::vector<std::vector<int>>& candidate_covers,
                        const std::vector<Element>& candidate_anchors) {
    CoverSearch cs;
    cs.n_elems = n_elems;
    cs.blocks = (n_elems + 63) / 64;
    cs.masks.resize(candidate_covers.size(), std::vector<std::uint64_t>(cs.blocks, 0));
    cs.candidates_for_elem.resize(n_elems);
    for (std::size_t c = 0; c < candidate_covers.size(); ++c)
        for (int e : candidate_covers[c]) {
            cs.masks[c][e / 64] |= 1ull << (e % 64);
            cs.candidates_for_elem[e].push_back(static_cast<int>(c));
        }
    for (int e = 0; e < n_elems; ++e)
        if (cs.candidates_for_elem[e].empty())
            throw std::logic_error("index: element not coverable by any translate");

    // greedy upper bound seeds the search
    std::vector<std::uint64_t> uncovered(cs.blocks, 0);
    for (int e = 0; e < n_elems; ++e) uncovered[e / 64] |= 1ull << (e % 64);
    std::vector<int> greedy_chosen;
    {
        auto u = uncovered;
        int left = n_elems;
        while (left > 0) {
            int best_c = -1, best_gain = 0;
            for (std::size_t c = 0; c < cs.masks.size(); ++c) {
                int gain = 0;
                for (int b = 0; b < cs.blocks; ++b) gain += std::popcount(cs.masks[c][b] & u[b]);
                if (gain > best_gain) { best_gain = gain; best_c = static_cast<int>(c); }
            }
            greedy_chosen.push_back(best_c);
            for (int b = 0; b < cs.blocks; ++b) u[b] &= ~cs.masks[best_c][b];
            left -= best_gain;
        }
    }
    int best = static_cast<int>(greedy_chosen.size());
    std::vector<int> best_chosen = greedy_chosen;
    std::vector<int> chosen;
    cs.search(uncovered, n_elems, 0, chosen, best, best_chosen);

    IndexResult r;
    r.count = best;
    for (int c : best_chosen) r.witness.push_back(candidate_anchors[c]);
    return r;
}

IndexResult index_finite(const GroupSpec& G, const FiniteSet& K, const FiniteSet& V) {
    const CayleyTable& t = G.table();
    std::vector<int> elems = K.elements();
    std::map<int, int> elem_pos;
    for (std::size_t i = 0; i < elems.size(); ++i) elem_pos[elems[i]] = static_cast<int>(i);

    // candidate anchors: g with k in g.V for some k, i.e. g = k v^{-1}
    std::vector<int> anchors;
    std::vector<bool> seen(t.n, false);
    for (int k : elems)
        for (int v : V.elements()) {
            int g = t.op(k, t.inv(v));
            if (!seen[g]) { seen[g] = true; anchors.push_back(g); }
        }
    std::vector<std::vector<int>> covers;
    std::vector<Element> anchor_elems;
    for (int g : anchors) {
        std::vector<int> cover;
        for (int v : V.elements()) {
            auto it = elem_pos.find(t.op(g, v));
            if (it != elem_pos.end()) cover.push_back(it->second);
        }
        covers.push_back(std::move(cover));
        anchor_elems.emplace_back(g);
    }
    IndexResult r = solve_cover(static_cast<int>(elems.size()), covers, anchor_elems);
    // verify
    FiniteSet covered = FiniteSet::empty(t.n);
    for (const Element& g : r.witness)
        covered = fset_union(covered, std::get<FiniteSet>(g_translate_set(G, g, SetValue(V))));
    if (!fset_subset(K, covered)) throw std::logic_error("index: finite witness cover failed verification");
    return r;
}

IndexResult index_int_add(const GroupSpec& G, const IntSet& K, const IntSet& V) {
    if (V.cofinite) {
        // one translate suffices: slide V until its finite complement sits
        // strictly left of K
        std::int64_t g = 0;
        if (!V.elems.empty()) {
            std::int64_t max_k = K.elems.back();
            std::int64_t min_excl = V.elems.front();
            g = max_k - min_excl + 1;
        }
        IntSet translated = zset_translate(V, g);
        if (!zset_subset(K, translated))
            throw std::logic_error("index: cofinite witness failed verification");
        return {1, {Element(Rational(g))}};
    }
    std::vector<std::int64_t> anchors;
    for (std::int64_t k : K.elems)
        for (std::int64_t v : V.elems) anchors.push_back(k - v);
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

    std::map<std::int64_t, int> elem_pos;
    for (std::size_t i = 0; i < K.elems.size(); ++i) elem_pos[K.elems[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> covers;
    std::vector<Element> anchor_elems;
    for (std::int64_t g : anchors) {
        std::vector<int> cover;
        for (std::int64_t v : V.elems) {
            auto it = elem_pos.find(g + v);
            if (it != elem_pos.end()) cover.push_back(it->second);
        }
        covers.push_back(std::move(cover));
        anchor_elems.emplace_back(Rational(static_cast<long long>(g)));
    }
    IndexResult r = solve_cover(static_cast<int>(K.elems.size()), covers, anchor_elems);
    IntSet covered = IntSet::empty();
    for (const Element& g : r.witness)
        covered = zset_union(covered, std::get<IntSet>(g_translate_set(G, g, SetValue(V))));
    if (!zset_subset(K, covered)) throw std::logic_error("index: int witness cover failed verification");
    return r;
}

}  // namespace

IndexResult index(const GroupSpec& G, const SetValue& K, const SetValue& V) {
    G.validate_set(K);
    G.validate_set(V);
    if (!is_compact_set(G, K)) throw std::domain_error("index: K must be compact");
    bool v_open_nbhd = is_open_set(G, V) && set_contains_identity(G, V);
    bool v_compact_interior = is_compact_set(G, V) && has_nonempty_interior(G, V);
    if (!v_open_nbhd && !v_compact_interior)
        throw std::domain_error(
            "index: V must be an open neighborhood of the identity or a compact set with "
            "nonempty interior");
    if (sv_is_empty(K)) return {0, {}};

    switch (G.type()) {
        case GroupType::finite:
            return index_finite(G, std::get<FiniteSet>(K), std::get<FiniteSet>(V));
        case GroupType::int_add:
            return index_int_add(G, std::get<IntSet>(K), std::get<IntSet>(V));
        default: {
            const auto& k = std::get<IntervalSet>(K);
            const auto& v = std::get<IntervalSet>(V);
            return index_continuous(G, k, v, v.kind() == Kind::open);
        }
    }
}

Rational prehaar(const GroupSpec& G, const PositiveCompact& K0, const SetValue& U, const SetValue& K) {
    long long num = index(G, K, U).count;
    long long den = index(G, K0.set, U).count;
    if (den == 0) throw std::logic_error("prehaar: index(K0, U) == 0 violates an internal invariant");
    return Rational(num) / Rational(den);
}

SetValue covering_separation_set(const GroupSpec& G, const SetValue& K, const SetValue& U) {
    G.validate_set(K);
    G.validate_set(U);
    switch (G.type()) {
        case GroupType::finite: {
            const auto& k = std::get<FiniteSet>(K);
            const auto& u = std::get<FiniteSet>(U);
            FiniteSet out = FiniteSet::empty(k.carrier_size);
            for (int a : k.elements())
                for (int b : u.elements()) out.mask |= 1u << G.table().op(a, G.table().inv(b));
            return out;
        }
        case GroupType::int_add: {
            const auto& k = std::get<IntSet>(K);
            const auto& u = std::get<IntSet>(U);
            if (!u.cofinite) {
                std::vector<std::int64_t> sums;
                for (auto a : k.elems)
                    for (auto b : u.elems) sums.push_back(a - b);
                return IntSet::finite(std::move(sums));
            }
            // K - U with cofinite U: x is missing iff a - x lies in the
            // finite complement for every a in K
            if (k.elems.empty()) return IntSet::empty();
            std::vector<std::int64_t> missing;
            for (auto c : u.elems) {
                std::int64_t x = k.elems.front() - c;
                bool all = true;
                for (auto a : k.elems)
                    if (u.contains(a - x)) { all = false; break; }
                if (all) missing.push_back(x);
            }
            return IntSet::all_but(std::move(missing));
        }
        default: {
            const auto& k = std::get<IntervalSet>(K);
            const auto& u = std::get<IntervalSet>(U);
            if (u.kind() != Kind::open)
                throw std::domain_error("separation set: U must be open");
            return iset_sumset_open(k, iset_invert(u, G.law()), G.law());
        }
    }
}

CheckReport prehaar_properties_check(const GroupSpec& G, const PositiveCompact& K0,
                                     const SetValue& U, const std::vector<PrehaarCase>& cases) {
    CheckReport report("prehaar_properties");
    long long idx_K0_U = index(G, K0.set, U).count;
    long long idx_K0_K0 = index(G, K0.set, K0.set).count;

    auto& base = report.add_case("h_U(K0) = 1");
    Rational h_K0 = Rational(idx_K0_U) / Rational(idx_K0_U);
    base.field("value", h_K0);
    base.field("index_K0_K0", Rational(idx_K0_K0));
    if (h_K0 != Rational(1)) base.verdict = Verdict::fail;

    for (const auto& c : cases) {
        auto& rec = report.add_case("case");
        bool ok = true;

        long long iK = index(G, c.K, U).count;
        long long iK2 = index(G, c.K2, U).count;
        long long iK_K0 = index(G, c.K, K0.set).count;
        Rational hK = Rational(iK) / Rational(idx_K0_U);
        Rational hK2 = Rational(iK2) / Rational(idx_K0_U);
        rec.field("h_K", hK);
        rec.field("h_K2", hK2);

        // submultiplicativity (K:U) <= (K:K0)(K0:U)
        bool sub_mult = iK <= iK_K0 * idx_K0_U;
        rec.field("submultiplicative", sub_mult);
        ok = ok && sub_mult;

        // box bounds 0 <= h <= (K:K0)
        bool box = hK.sign() >= 0 && hK <= Rational(iK_K0);
        rec.field("box_bound", box);
        ok = ok && box;

        // translation invariance
        SetValue xK = g_translate_set(G, c.x, c.K);
        long long i_xK = index(G, xK, U).count;
        bool translate_ok = i_xK == iK;
        rec.field("translation_invariant", translate_ok);
        ok = ok && translate_ok;

        // monotonicity on K <= K u K2
        SetValue K_union = sv_union(c.K, c.K2);
        long long iU = index(G, K_union, U).count;
        bool mono = iK <= iU;
        rec.field("monotone", mono);
        ok = ok && mono;

        // subadditivity, and exact additivity under separation
        bool subadd = iU <= iK + iK2;
        rec.field("subadditive", subadd);
        ok = ok && subadd;
        bool separated = sv_disjoint(covering_separation_set(G, c.K, U),
                                     covering_separation_set(G, c.K2, U));
        rec.field("separated", separated);
        if (separated) {
            bool additive = iU == iK + iK2;
            rec.field("additive", additive);
            ok = ok && additive;
        }

        if (!ok) rec.verdict = Verdict::fail;
    }
    return report;
}

ChaarEstimate chaar_estimate(const GroupSpec& G, const PositiveCompact& K0,
                             const std::vector<SetValue>& k_list, int n_max) {
    if (n_max < 1) throw std::domain_error("chaar_estimate: n_max must be >= 1");
    ChaarEstimate est;
    est.n_max = n_max;
    est.k_list = k_list;
    est.values.resize(k_list.size());
    for (std::size_t i = 0; i < k_list.size(); ++i) {
        long long bound = index(G, k_list[i], K0.set).count;
        for (int n = 1; n <= n_max; ++n) {
            SetValue V = shrink_basis(G, n);
            Rational h = prehaar(G, K0, V, k_list[i]);
            if (h.sign() < 0 || h > Rational(bound))
                throw std::logic_error("chaar_estimate: value escapes [0, (K:K0)]");
            est.values[i].push_back(h);
        }
    }
    est.cauchy_gap = Rational(0);
    for (const auto& seq : est.values) {
        int first_tail = std::max(1, n_max - 3);
        for (int n = first_tail; n < n_max; ++n) {
            Rational step = (seq[n] - seq[n - 1]).abs();
            est.cauchy_gap = max(est.cauchy_gap, step);
        }
    }
    return est;
}

CheckReport chaar_properties_check(const GroupSpec& G, const PositiveCompact& K0,
                                   const std::vector<PrehaarCase>& cases, int n_max,
                                   const Rational& tolerance) {
    CheckReport report("chaar_properties");

    // h(empty) = 0 and h(K0) = 1 at every n
    auto& base = report.add_case("h(empty) = 0 and h(K0) = 1");
    for (int n = 1; n <= n_max; ++n) {
        SetValue V = shrink_basis(G, n);
        SetValue empty_set = sv_diff(K0.set, K0.set);
        if (prehaar(G, K0, V, empty_set) != Rational(0)) base.verdict = Verdict::fail;
        if (prehaar(G, K0, V, K0.set) != Rational(1)) base.verdict = Verdict::fail;
    }

    for (const auto& c : cases) {
        auto& rec = report.add_case("case");
        bool ok = true;
        bool disjoint = sv_disjoint(c.K, c.K2);
        SetValue K_union = sv_union(c.K, c.K2);
        SetValue xK = g_translate_set(G, c.x, c.K);

        Rational residual_at_nmax(0);
        bool additivity_exact_at_nmax = false;
        for (int n = 1; n <= n_max; ++n) {
            SetValue V = shrink_basis(G, n);
            Rational hK = prehaar(G, K0, V, c.K);
            Rational hK2 = prehaar(G, K0, V, c.K2);
            Rational hU = prehaar(G, K0, V, K_union);
            Rational hxK = prehaar(G, K0, V, xK);
            ok = ok && hK.sign() >= 0;
            ok = ok && hxK == hK;
            ok = ok && hK <= hU;
            ok = ok && hU <= hK + hK2;
            if (disjoint) {
                bool separated = sv_disjoint(covering_separation_set(G, c.K, V),
                                             covering_separation_set(G, c.K2, V));
                Rational residual = hK + hK2 - hU;
                if (separated && residual != Rational(0)) ok = false;
                if (n == n_max) {
                    residual_at_nmax = residual;
                    additivity_exact_at_nmax = residual == Rational(0);
                }
            }
        }
        if (disjoint) {
            rec.field("additivity_residual", residual_at_nmax);
            rec.field("additivity_exact", additivity_exact_at_nmax);
            ok = ok && residual_at_nmax <= tolerance;
        }
        if (!ok) rec.verdict = Verdict::fail;
    }
    return report;
}

ContentFn content_from_length() {
    ContentFn h;
    h.label = "length";
    h.eval = [](const SetValue& s) {
        if (!std::holds_alternative<IntervalSet>(s))
            throw std::domain_error("length content: expects interval sets");
        return iset_length(std::get<IntervalSet>(s));
    };
    return h;
}

ContentFn content_from_counting() {
    ContentFn h;
    h.label = "counting";
    h.eval = [](const SetValue& s) -> ExtNonneg {
        if (const auto* f = std::get_if<FiniteSet>(&s))
            return ExtNonneg::finite(Rational(f->size()));
        if (const auto* z = std::get_if<IntSet>(&s)) {
            if (z->cofinite) return ExtNonneg::infinity();
            return ExtNonneg::finite(Rational(static_cast<long long>(z->size())));
        }
        throw std::domain_error("counting content: expects discrete sets");
    };
    return h;
}

ContentFn content_from_chaar(const GroupSpec& G, const PositiveCompact& K0, int n) {
    if (n < 1) throw std::domain_error("chaar content: n must be >= 1");
    ContentFn h;
    h.label = "chaar:" + std::to_string(n);
    h.eval = [G, K0, n](const SetValue& s) {
        return ExtNonneg::finite(prehaar(G, K0, shrink_basis(G, n), s));
    };
    if (n > 1) {
        h.eval_coarser = [G, K0, n](const SetValue& s) {
            return ExtNonneg::finite(prehaar(G, K0, shrink_basis(G, n - 1), s));
        };
    }
    return h;
}

InnerContentResult inner_content(const GroupSpec& G, const ContentFn& h, const SetValue& U,
                                 const EpsSchedule& schedule) {
    if (!is_open_set(G, U)) throw std::domain_error("inner_content: U must be open");
    InnerContentResult out;
    if (G.is_discrete()) {
        if (const auto* z = std::get_if<IntSet>(&U); z && z->cofinite) {
            // exhaust a cofinite set by growing finite windows
            for (int j = 1; j <= schedule.k_max; ++j) {
                std::int64_t w = 1ll << j;
                std::vector<std::int64_t> window;
                for (std::int64_t v = -w; v <= w; ++v)
                    if (z->contains(v)) window.push_back(v);
                out.sequence.push_back(h.eval(IntSet::finite(std::move(window))));
            }
        } else {
            out.sequence.push_back(h.eval(U));
        }
    } else {
        const auto& u = std::get<IntervalSet>(U);
        for (int j = 1; j <= schedule.k_max; ++j)
            out.sequence.push_back(h.eval(iset_shrink(u, schedule.eps(j))));
    }
    out.final_value = out.sequence.back();
    out.last_step = out.sequence.size() >= 2
                        ? ext_abs_diff(out.sequence.back(), out.sequence[out.sequence.size() - 2])
                        : ExtNonneg::finite(0);
    return out;
}

namespace {

ExtNonneg cauchy_pad(const ContentFn& h, const SetValue& s) {
    if (!h.eval_coarser) return ExtNonneg::finite(0);
    return ext_abs_diff(h.eval(s), h.eval_coarser(s));
}

}  // namespace

OuterMeasureResult outer_measure_from_content(const GroupSpec& G, const ContentFn& h,
                                              const SetValue& A, const EpsSchedule& schedule) {
    G.validate_set(A);
    OuterMeasureResult out;
    if (G.is_discrete()) {
        // every discrete set is clopen: the infimum is attained at A itself
        bool cof = std::holds_alternative<IntSet>(A) && std::get<IntSet>(A).cofinite;
        ExtNonneg v = cof ? ExtNonneg::infinity() : h.eval(A);
        out.sequence.push_back(v);
        out.bracket = Bracket::exact(v);
        out.last_step = ExtNonneg::finite(0);
        return out;
    }
    const auto& a = std::get<IntervalSet>(A);
    const Rational eps_last = schedule.last();
    for (int j = 1; j <= schedule.k_max; ++j) {
        IntervalSet fat = iset_fatten(a, schedule.eps(j));
        out.sequence.push_back(h.eval(iset_shrink(fat, eps_last)));
    }
    // lower: h of a compact inside A; upper: h of a compact covering an
    // open superset of A
    ExtNonneg lo = h.eval(SetValue(iset_shrink(a, eps_last)));
    ExtNonneg hi = h.eval(SetValue(iset_fatten(a, eps_last).closure()));
    out.bracket = Bracket{lo, hi};
    out.last_step = out.sequence.size() >= 2
                        ? ext_abs_diff(out.sequence.back(), out.sequence[out.sequence.size() - 2])
                        : ExtNonneg::finite(0);
    return out;
}

CheckReport caratheodory_check(const GroupSpec& G, const ContentFn& h, const SetValue& A,
                               const std::vector<SetValue>& probes, const EpsSchedule& schedule,
                               const Rational& tolerance) {
    CheckReport report("caratheodory");
    for (const auto& P : probes) {
        auto& rec = report.add_case("probe");
        SetValue inter = sv_intersect(P, A);
        SetValue rest = sv_diff(P, A);
        Bracket bP = outer_measure_from_content(G, h, P, schedule).bracket;
        Bracket bI = outer_measure_from_content(G, h, inter, schedule).bracket;
        Bracket bR = outer_measure_from_content(G, h, rest, schedule).bracket;
        if (bP.upper.is_infinite() || bI.upper.is_infinite() || bR.upper.is_infinite()) {
            bool equal = bP.lower == bI.lower + bR.lower && bP.upper == bI.upper + bR.upper;
            rec.field("exact_extended_equality", equal);
            if (!equal) rec.verdict = Verdict::fail;
            continue;
        }
        Rational residual = (bP.midpoint() - bI.midpoint() - bR.midpoint()).abs();
        ExtNonneg widths = bP.width() + bI.width() + bR.width();
        Rational bound = tolerance + widths.value();
        rec.field("residual", ExtNonneg::finite(residual));
        rec.field("bound", ExtNonneg::finite(bound));
        rec.field("m_P", bP);
        rec.field("m_P_and_A", bI);
        rec.field("m_P_minus_A", bR);
        if (residual > bound) rec.verdict = Verdict::fail;
    }
    return report;
}

HaarEstimateResult haar_measure_estimate(const GroupSpec& G, const PositiveCompact& K0,
                                         const SetValue& A, int n_max, const EpsSchedule& schedule) {
    if (n_max < 1) throw std::domain_error("haar_measure_estimate: n_max must be >= 1");
    G.validate_set(A);
    HaarEstimateResult result;
    result.cauchy_gap = Rational(0);

    if (G.is_discrete()) {
        if (const auto* z = std::get_if<IntSet>(&A); z && z->cofinite) {
            result.bracket = Bracket::exact(ExtNonneg::infinity());
            return result;
        }
        Rational value = prehaar(G, K0, shrink_basis(G, 0), A);
        result.bracket = Bracket::exact(ExtNonneg::finite(value));
        result.prehaar_by_n.assign(n_max, value);
        return result;
    }

    const auto& a = std::get<IntervalSet>(A);
    for (int n = 1; n <= n_max; ++n)
        result.prehaar_by_n.push_back(prehaar(G, K0, shrink_basis(G, n), SetValue(a.closure())));

    ContentFn h = content_from_chaar(G, K0, n_max);
    const Rational eps_last = schedule.last();

    auto enclose = [&](const IntervalSet& inner, const IntervalSet& outer) {
        Bracket b{h.eval(SetValue(inner)), h.eval(SetValue(outer))};
        ExtNonneg gap = cauchy_pad(h, SetValue(inner)) + cauchy_pad(h, SetValue(outer));
        return std::pair<Bracket, ExtNonneg>{b, gap};
    };

    const IntervalSet& k0 = std::get<IntervalSet>(K0.set);
    auto [num, gap_num] = enclose(iset_shrink(a, eps_last), iset_fatten(a, eps_last).closure());
    auto [den, gap_den] = enclose(iset_shrink(k0, eps_last), iset_fatten(k0, eps_last).closure());
    if (den.lower.is_zero())
        throw std::domain_error(
            "haar_measure_estimate: normalization bracket reaches 0; refine the schedule so "
            "shrink(K0) keeps positive inner content");

    result.bracket = Bracket{num.lower / den.upper, num.upper / den.lower};
    result.cauchy_gap = gap_num.value() + gap_den.value();
    return result;
}

Bracket HaarEvaluator::eval_bracket(const SetValue& A) const {
    return haar_measure_estimate(group, K0, A, n_max, schedule).bracket;
}

}  // namespace exm
