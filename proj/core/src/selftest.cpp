#include "exm/selftest.hpp"

#include "exm/generators.hpp"
#include "exm/haar.hpp"
#include "exm/json_io.hpp"
#include "exm/uniqueness.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <array>
#include <future>

namespace exm {

long long min_cover_enumeration_oracle(const IntervalSet& K, const Rational& w) {
    if (K.is_empty()) return 0;
    if (K.kind() != Kind::closed)
        throw std::domain_error("cover oracle: K must be closed");
    if (w.sign() <= 0) throw std::domain_error("cover oracle: window width must be positive");

    // crude upper bound, independent of the greedy implementation
    long long upper = 0;
    for (const auto& [lo, hi] : K.intervals()) {
        Rational len = hi - lo;
        upper += (len / w).floor().convert_to<long long>() + 1;
    }

    // candidate grid: component endpoints shifted by multiples of w
    std::vector<Rational> grid;
    Rational lo_all = K.intervals().front().first;
    Rational hi_all = K.intervals().back().second;
    for (const auto& [lo, hi] : K.intervals()) {
        for (const Rational& e : {lo, hi}) {
            Rational c = e;
            while (c <= hi_all) {
                if (c >= lo_all - w) grid.push_back(c);
                c += w;
            }
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    // remaining length of K at or beyond t, for the admissible lower bound
    auto remaining_length = [&](const Rational& t) {
        Rational total(0);
        for (const auto& [lo, hi] : K.intervals()) {
            if (hi <= t) continue;
            total += hi - (lo > t ? lo : t);
        }
        return total;
    };

    long long best = upper;
    // depth-first over anchors covering the leftmost uncovered point
    auto rec = [&](auto&& self, const Rational& t, long long used) -> void {
        // admissible bound: the remaining mass needs at least ceil(rem/w)
        // windows, and the uncovered point t needs one regardless
        Rational rem = remaining_length(t);
        Rational ratio = rem / w;
        long long lower = ratio.floor().convert_to<long long>();
        if (Rational(lower) != ratio) ++lower;
        lower = std::max(lower, 1ll);
        if (used + lower >= best) return;
        for (const Rational& c : grid) {
            if (c > t) break;
            if (t < c + w) {  // window [c, c+w) covers t
                auto nxt = iset_min_geq(K, c + w);
                if (!nxt)
                    best = std::min(best, used + 1);
                else
                    self(self, *nxt, used + 1);
            }
        }
    };
    rec(rec, *iset_min(K), 0);
    return best;
}

namespace {

using Suite = CheckReport (*)(std::uint64_t);

void expect(CheckReport& rep, const std::string& name, bool ok) {
    auto& rec = rep.add_case(name);
    if (!ok) rec.verdict = Verdict::fail;
}

// ---- numeric ---------------------------------------------------------

ExtNonneg random_ext(Rng& rng) {
    if (rng.uniform(0, 5) == 0) return ExtNonneg::infinity();
    return ExtNonneg::finite(rng.nonneg_rational(9, 7));
}

CheckReport suite_numeric(std::uint64_t seed) {
    CheckReport rep("numeric");
    bool comm = true, assoc = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 100 + i);
        ExtNonneg a = random_ext(rng), b = random_ext(rng), c = random_ext(rng);
        comm = comm && a + b == b + a && a * b == b * a;
        assoc = assoc && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c);
    }
    expect(rep, "ext add/mul commutative", comm);
    expect(rep, "ext add/mul associative", assoc);

    bool canonical = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 300 + i);
        Rational a = rng.rational(50, 40), b = rng.rational(50, 40);
        for (const Rational& r : {a + b, a - b, a * b, b.is_zero() ? a : a / b}) {
            canonical = canonical && r.den() > 0 &&
                        boost::integer::gcd(r.num() < 0 ? BigInt(-r.num()) : r.num(), r.den()) == 1;
        }
    }
    expect(rep, "rationals stay reduced with positive denominator", canonical);

    bool triangle = true, homog = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 500 + i);
        VecQ u = gen::vec(rng, 3, 9, 7), v = gen::vec(rng, 3, 9, 7);
        Rational s = rng.rational(9, 7);
        triangle = triangle && (u + v).sup_norm() <= u.sup_norm() + v.sup_norm();
        homog = homog && (s * u).sup_norm() == s.abs() * u.sup_norm();
    }
    expect(rep, "sup-norm triangle inequality", triangle);
    expect(rep, "sup-norm absolute homogeneity", homog);
    return rep;
}

// ---- setalg ----------------------------------------------------------

CheckReport suite_setalg(std::uint64_t seed) {
    CheckReport rep("setalg");

    bool idem = true;
    for (int i = 0; i < 150; ++i) {
        Rng rng = Rng::derive(seed, 1000 + i);
        Kind kind = std::array{Kind::closed, Kind::open, Kind::half_open}[rng.uniform(0, 2)];
        IntervalSet s = gen::interval_set(rng, kind, 4, 9, 8);
        idem = idem && IntervalSet(s.kind(), s.intervals()) == s;
    }
    expect(rep, "canonicalization idempotent", idem);

    bool valuation = true, translation = true;
    for (int i = 0; i < 300; ++i) {
        Rng rng = Rng::derive(seed, 1200 + i);
        IntervalSet a = gen::interval_set(rng, Kind::half_open, 3, 9, 8);
        IntervalSet b = gen::interval_set(rng, Kind::half_open, 3, 9, 8);
        ExtNonneg lhs = iset_length(iset_union(a, b)) + iset_length(iset_intersect(a, b));
        valuation = valuation && lhs == iset_length(a) + iset_length(b);
        Rational g = rng.rational(9, 8);
        translation =
            translation && iset_length(iset_translate(a, g, GroupLaw::additive)) == iset_length(a);
    }
    expect(rep, "length is a valuation", valuation);
    expect(rep, "length is translation invariant", translation);

    bool membership = true;
    for (int i = 0; i < 120; ++i) {
        Rng rng = Rng::derive(seed, 1600 + i);
        IntervalSet a = gen::interval_set(rng, Kind::half_open, 3, 6, 5);
        IntervalSet b = gen::interval_set(rng, Kind::half_open, 3, 6, 5);
        for (int p = 0; p < 12; ++p) {
            Rational x = rng.rational(8, 10);
            bool in_a = iset_member(a, x), in_b = iset_member(b, x);
            membership = membership && iset_member(iset_union(a, b), x) == (in_a || in_b);
            membership = membership && iset_member(iset_intersect(a, b), x) == (in_a && in_b);
            membership = membership && iset_member(iset_diff(a, b), x) == (in_a && !in_b);
        }
    }
    expect(rep, "set operations agree with membership sampling", membership);

    bool slabs_ok = true;
    for (int i = 0; i < 1000; ++i) {
        Rng rng = Rng::derive(seed, 2000 + i);
        RectUnion A = gen::rect_union(rng, 3, 8, 4);
        Rational x = rng.rational(10, 5);
        IntervalSet slice = A.slice_x(x);
        for (int p = 0; p < 4; ++p) {
            Rational y = rng.rational(10, 5);
            slabs_ok = slabs_ok && A.member(x, y) == iset_member(slice, y);
        }
    }
    expect(rep, "slab decomposition matches membership", slabs_ok);

    bool involution = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 3200 + i);
        Kind kind = std::array{Kind::closed, Kind::open, Kind::half_open}[rng.uniform(0, 2)];
        IntervalSet s = gen::interval_set(rng, kind, 3, 9, 8);
        involution = involution &&
                     iset_invert(iset_invert(s, GroupLaw::additive), GroupLaw::additive) == s;
        IntervalSet pos = gen::interval_set(rng, kind, 3, 9, 8, /*positive_only=*/true);
        involution =
            involution &&
            iset_invert(iset_invert(pos, GroupLaw::multiplicative), GroupLaw::multiplicative) == pos;
    }
    expect(rep, "set inversion is involutive", involution);
    return rep;
}

// ---- group -----------------------------------------------------------

CheckReport suite_group(std::uint64_t seed) {
    CheckReport rep("group");
    std::vector<GroupSpec> groups = {GroupSpec::finite(CayleyTable::symmetric3()),
                                     GroupSpec::finite(CayleyTable::cyclic(5)),
                                     GroupSpec::finite(CayleyTable::klein4()),
                                     GroupSpec::real_add(), GroupSpec::pos_mul(),
                                     GroupSpec::int_add()};
    expect(rep, "cayley tables pass the exhaustive axiom check", true);  // ctors above validate

    bool automorphism = true, cardinality = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 4000 + i);
        const GroupSpec& G = groups[rng.uniform(0, static_cast<long long>(groups.size()) - 1)];
        Element g = gen::element(rng, G);
        SetValue a = gen::group_set(rng, G, Kind::half_open);
        SetValue b = gen::group_set(rng, G, Kind::half_open);
        automorphism = automorphism &&
                       g_translate_set(G, g, sv_union(a, b)) ==
                           sv_union(g_translate_set(G, g, a), g_translate_set(G, g, b)) &&
                       g_translate_set(G, g, sv_intersect(a, b)) ==
                           sv_intersect(g_translate_set(G, g, a), g_translate_set(G, g, b));
        if (G.type() == GroupType::finite)
            cardinality = cardinality && std::get<FiniteSet>(g_translate_set(G, g, a)).size() ==
                                             std::get<FiniteSet>(a).size();
        if (G.type() == GroupType::real_add)
            cardinality = cardinality && iset_length(std::get<IntervalSet>(g_translate_set(G, g, a))) ==
                                             iset_length(std::get<IntervalSet>(a));
    }
    expect(rep, "translation is a set-algebra automorphism", automorphism);
    expect(rep, "translation preserves the reference size", cardinality);

    bool inv_inv = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 4400 + i);
        const GroupSpec& G = groups[rng.uniform(0, static_cast<long long>(groups.size()) - 1)];
        SetValue a = gen::group_set(rng, G, Kind::half_open);
        inv_inv = inv_inv && g_invert_set(G, g_invert_set(G, a)) == a;
    }
    expect(rep, "set inversion is involutive on every carrier", inv_inv);

    bool nested = true;
    for (const auto& G : {GroupSpec::real_add(), GroupSpec::pos_mul()}) {
        for (int n = 0; n < 10; ++n) {
            SetValue v = shrink_basis(G, n), w = shrink_basis(G, n + 1);
            nested = nested && sv_subset(w, v) && set_contains_identity(G, v);
        }
        ExtNonneg tail = iset_length(std::get<IntervalSet>(shrink_basis(G, 12)));
        nested = nested && tail < ExtNonneg::finite(Rational(1, 256));
    }
    expect(rep, "shrink basis is nested and collapses to the identity", nested);
    return rep;
}

// ---- measure ---------------------------------------------------------

CheckReport suite_measure(std::uint64_t seed) {
    CheckReport rep("measure");
    GroupSpec R = GroupSpec::real_add();
    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());

    bool additive = true, monotone = true;
    for (int i = 0; i < 300; ++i) {
        Rng rng = Rng::derive(seed, 5000 + i);
        MeasureSpec mu = rng.coin() ? MeasureSpec::lebesgue(R, rng.nonneg_rational(5, 3))
                                    : MeasureSpec::dirac(R, Element(rng.rational(6, 4)));
        auto cells = gen::disjoint_cells(rng, 4, 9, 8);
        SetValue a = cells[0], b = cells[2];
        additive = additive &&
                   measure_eval(mu, sv_union(a, b)) == measure_eval(mu, a) + measure_eval(mu, b);
        SetValue big = sv_union(a, SetValue(cells[1]));
        monotone = monotone && measure_eval(mu, a) <= measure_eval(mu, big);
    }
    expect(rep, "finite additivity on disjoint sets", additive);
    expect(rep, "monotonicity under inclusion", monotone);

    bool linear = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 5400 + i);
        MeasureSpec mu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        SimpleFunc f = gen::simple_func(rng, R, 3, 6, 4);
        SimpleFunc g = gen::simple_func(rng, R, 3, 6, 4);
        ExtNonneg c = ExtNonneg::finite(rng.nonneg_rational(5, 3));
        linear = linear && lintegral(mu, simple_add(f, g)) == lintegral(mu, f) + lintegral(mu, g);
        linear = linear && lintegral(mu, simple_scale(c, f)) == c * lintegral(mu, f);
    }
    expect(rep, "lintegral is linear", linear);

    bool consistent = true;
    for (int i = 0; i < 150; ++i) {
        Rng rng = Rng::derive(seed, 5700 + i);
        MeasureSpec mu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        StepFuncVec f = gen::step_func(rng, R, 1, 3);
        std::vector<SimpleFunc::Piece> abs_pieces;
        bool nonneg = true;
        for (const auto& p : f.pieces()) {
            if (p.value.comps[0].sign() < 0) nonneg = false;
            abs_pieces.push_back({p.set, ExtNonneg::finite(p.value.comps[0].abs())});
        }
        if (!nonneg) continue;
        ExtNonneg lower = lintegral(mu, SimpleFunc(abs_pieces));
        VecQ vec = bintegral(mu, f);
        consistent = consistent && lower.is_finite() && lower.value() == vec.comps[0];
    }
    expect(rep, "bintegral agrees with lintegral in dimension one", consistent);

    {
        // non-integrable 1-D function: lower integral infinite, vector 0
        GroupSpec Z = GroupSpec::int_add();
        MeasureSpec cnt = MeasureSpec::counting(Z);
        StepFuncVec f(1, {{IntSet::all(), VecQ({Rational(1)})}});
        bool ok = !integrable_check(cnt, f) && lintegral(cnt, norm_func(f)).is_infinite() &&
                  bintegral(cnt, f) == VecQ::zero(1);
        expect(rep, "non-integrable: lower integral infinite, vector integral zero", ok);
    }

    bool invariant = true;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::derive(seed, 6000 + i);
        MeasureSpec mu = rng.coin() ? MeasureSpec::lebesgue(R, rng.nonneg_rational(5, 3))
                                    : MeasureSpec::counting(S3);
        const GroupSpec& G = mu.group();
        std::vector<InvarianceCase> cases = {{gen::element(rng, G), gen::group_set(rng, G, Kind::half_open)}};
        invariant = invariant && left_invariance_check(mu, cases).all_pass();
    }
    expect(rep, "scaled Lebesgue and counting are left invariant", invariant);

    {
        MeasureSpec dirac = MeasureSpec::dirac(R, Element(Rational(0)));
        std::vector<InvarianceCase> cases;
        for (int i = 0; i < 40; ++i) {
            Rng rng = Rng::derive(seed, 6200 + i);
            cases.push_back({Element(rng.rational(6, 3)),
                             gen::group_set(rng, R, Kind::half_open)});
        }
        CheckReport inv = left_invariance_check(dirac, cases);
        expect(rep, "dirac fails left invariance on some seeded case", inv.fail_count() > 0);
    }
    return rep;
}

// ---- haar ------------------------------------------------------------

CheckReport suite_haar(std::uint64_t seed) {
    CheckReport rep("haar");
    GroupSpec R = GroupSpec::real_add();
    GroupSpec P = GroupSpec::pos_mul();

    bool formula = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 7000 + i);
        Rational lo = rng.rational(8, 5);
        Rational len = rng.nonneg_rational(6, 4) + Rational(1, 4);
        Rational w = rng.nonneg_rational(2, 4) + Rational(1, 5);
        SetValue K = IntervalSet::single(Kind::closed, lo, lo + len);
        SetValue V = IntervalSet::single(Kind::open, -w / Rational(2), w / Rational(2));
        long long expected = (len / w).floor().convert_to<long long>() + 1;
        formula = formula && index(R, K, V).count == expected;
    }
    expect(rep, "single-interval index matches floor(len/w)+1", formula);

    bool oracle_ok = true;
    for (int i = 0; i < 60; ++i) {
        Rng rng = Rng::derive(seed, 7300 + i);
        IntervalSet K = gen::interval_set(rng, Kind::closed, 3, 3, 4);
        Rational w = Rational(1, 2) + rng.nonneg_rational(2, 2);
        SetValue V = IntervalSet::single(Kind::open, Rational(0) - w / Rational(2), w / Rational(2));
        long long greedy = index(R, SetValue(K), V).count;
        oracle_ok = oracle_ok && greedy == min_cover_enumeration_oracle(K, w);
    }
    expect(rep, "greedy count matches the placement-enumeration oracle", oracle_ok);

    bool box = true, trans = true;
    PositiveCompact K0(R, IntervalSet::single(Kind::closed, Rational(0), Rational(1)));
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::derive(seed, 7500 + i);
        SetValue K = gen::interval_set(rng, Kind::closed, 3, 6, 4);
        SetValue U = shrink_basis(R, static_cast<int>(rng.uniform(1, 6)));
        Rational h = prehaar(R, K0, U, K);
        long long bound = index(R, K, K0.set).count;
        box = box && h.sign() >= 0 && h <= Rational(bound);
        Element x = gen::element(rng, R);
        trans = trans && prehaar(R, K0, U, g_translate_set(R, x, K)) == h;
    }
    expect(rep, "prehaar stays in the box [0, (K:K0)]", box);
    expect(rep, "prehaar is translation invariant", trans);

    bool mul_formula = true;
    PositiveCompact K0p(P, IntervalSet::single(Kind::closed, Rational(1), Rational(2)));
    for (int i = 0; i < 40; ++i) {
        Rng rng = Rng::derive(seed, 7800 + i);
        Rational lo = Rational(1) + rng.nonneg_rational(3, 2);
        Rational hi = lo * (Rational(1) + rng.nonneg_rational(3, 2) + Rational(1, 2));
        SetValue K = IntervalSet::single(Kind::closed, lo, hi);
        int n = static_cast<int>(rng.uniform(1, 5));
        SetValue V = shrink_basis(P, n);
        const auto& v = std::get<IntervalSet>(V).intervals().front();
        Rational r = v.second / v.first;
        // smallest m with r^m > hi/lo
        long long m = 1;
        Rational acc = r;
        while (acc <= hi / lo) { acc *= r; ++m; }
        mul_formula = mul_formula && index(P, K, V).count == m;
    }
    expect(rep, "multiplicative index matches the power-count reference", mul_formula);

    bool est_invariant = true;
    EpsSchedule sched = EpsSchedule::dyadic(8);
    for (int i = 0; i < 5; ++i) {
        Rng rng = Rng::derive(seed, 7900 + i);
        SetValue A = gen::interval_set(rng, Kind::half_open, 2, 5, 4);
        Rational g = rng.rational(5, 3);
        HaarEstimateResult a = haar_measure_estimate(R, K0, A, 6, sched);
        HaarEstimateResult b = haar_measure_estimate(
            R, K0, g_translate_set(R, Element(g), A), 6, sched);
        est_invariant = est_invariant &&
                        !(a.bracket.upper < b.bracket.lower || b.bracket.upper < a.bracket.lower);
    }
    expect(rep, "haar estimate is translation invariant within brackets", est_invariant);
    return rep;
}

// ---- product ---------------------------------------------------------

CheckReport suite_product(std::uint64_t seed) {
    CheckReport rep("product");
    GroupSpec R = GroupSpec::real_add();
    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());

    bool rect_law = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 8000 + i);
        MeasureSpec mu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        MeasureSpec nu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        IntervalSet A = gen::interval_set(rng, Kind::half_open, 2, 8, 5);
        IntervalSet B = gen::interval_set(rng, Kind::half_open, 2, 8, 5);
        ProductSet AB = RectUnion::from_rects({{A, B}});
        rect_law = rect_law && prod_measure(mu, nu, AB) ==
                                   measure_eval(mu, SetValue(A)) * measure_eval(nu, SetValue(B));
    }
    expect(rep, "rectangle law", rect_law);

    bool transpose_ok = true;
    for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(seed, 8300 + i);
        MeasureSpec mu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        MeasureSpec nu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        ProductSet A = gen::rect_union(rng, 3, 8, 4);
        transpose_ok = transpose_ok && symmetric_formula_check(mu, nu, A).all_pass();
    }
    expect(rep, "transpose symmetry", transpose_ok);

    {
        bool rejected = false;
        try {
            prod_measure(MeasureSpec::counting(R), MeasureSpec::lebesgue(R, Rational(1)),
                         ProductSet(RectUnion()));
        } catch (const std::domain_error&) {
            rejected = true;
        }
        expect(rep, "non-sigma-finite factors are rejected", rejected);
    }

    bool tonelli_ok = true;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::derive(seed, 8500 + i);
        MeasureSpec mu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        MeasureSpec nu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        tonelli_ok = tonelli_ok && tonelli_check(mu, nu, gen::simple_func2d(rng, 3)).all_pass();
    }
    expect(rep, "tonelli three-way equality on seeded functions", tonelli_ok);

    bool fubini_ok = true;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::derive(seed, 8700 + i);
        MeasureSpec mu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        MeasureSpec nu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        StepFuncVec2D f = gen::step_func2d(rng, 2, 3);
        fubini_ok = fubini_ok && fubini_integrability_check(mu, nu, f).all_pass() &&
                    fubini_check(mu, nu, f).all_pass();
    }
    expect(rep, "fubini part 1 and three-way equality on seeded functions", fubini_ok);

    bool finite_ok = true;
    MeasureSpec cnt = MeasureSpec::counting(S3);
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::derive(seed, 8900 + i);
        FinitePairSet A = gen::finite_pair_set(rng, 6);
        finite_ok = finite_ok && symmetric_formula_check(cnt, cnt, ProductSet(A)).all_pass();
        SimpleFunc2D f({{ProductSet(A), ExtNonneg::finite(rng.nonneg_rational(5, 3))}});
        finite_ok = finite_ok && tonelli_check(cnt, cnt, f).all_pass();
    }
    expect(rep, "finite-carrier product checks", finite_ok);
    return rep;
}

// ---- uniqueness ------------------------------------------------------

CheckReport suite_uniqueness(std::uint64_t seed) {
    CheckReport rep("uniqueness");
    GroupSpec R = GroupSpec::real_add();
    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
    MeasureSpec cnt = MeasureSpec::counting(S3);

    {
        std::vector<ProductSet> cases;
        for (int i = 0; i < 200; ++i) {
            Rng rng = Rng::derive(seed, 9000 + i);
            cases.push_back(gen::finite_pair_set(rng, 6));
        }
        expect(rep, "S and T preserve counting^2 on S3",
               measure_preserving_check(S3, cnt, cnt, cases).all_pass());
    }

    {
        std::vector<ProductSet> cases;
        for (int i = 0; i < 50; ++i) {
            Rng rng = Rng::derive(seed, 9300 + i);
            cases.push_back(gen::rect_union(rng, 3, 6, 4));
        }
        MeasureSpec mu = MeasureSpec::lebesgue(R, Rational(1));
        MeasureSpec nu = MeasureSpec::lebesgue(R, Rational(3, 2));
        expect(rep, "S and T preserve scaled Lebesgue products",
               measure_preserving_check(R, mu, nu, cases).all_pass());
    }

    bool key_ok = true;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::derive(seed, 9500 + i);
        MeasureSpec mu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3) + Rational(1, 3));
        MeasureSpec nu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3) + Rational(1, 3));
        Rational lo = rng.rational(5, 3);
        SetValue K = IntervalSet::single(Kind::closed, lo, lo + Rational(1) + rng.nonneg_rational(3, 2));
        SimpleFunc f = gen::simple_func(rng, R, 3, 5, 3);
        key_ok = key_ok && key_identity_check(R, mu, nu, K, f).all_pass();
    }
    for (int i = 0; i < 50; ++i) {
        Rng rng = Rng::derive(seed, 9700 + i);
        SetValue K = gen::finite_set(rng, 6, /*nonempty=*/true);
        SimpleFunc f = gen::simple_func(rng, S3, 4, 5, 3);
        key_ok = key_ok && key_identity_check(S3, cnt, cnt, K, f).all_pass();
    }
    expect(rep, "key identity holds exactly on the invariant family", key_ok);

    bool dual_ok = true;
    for (int i = 0; i < 50; ++i) {
        Rng rng = Rng::derive(seed, 9900 + i);
        MeasureSpec mu = rng.coin() ? MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3))
                                    : MeasureSpec::dirac(R, Element(rng.rational(4, 3)));
        std::vector<InvarianceCase> cases = {
            {gen::element(rng, R), gen::group_set(rng, R, Kind::half_open)}};
        dual_ok = dual_ok && inversion_duality_check(R, mu, cases).no_failures();
    }
    expect(rep, "inversion duality (involution and invariance transfer)", dual_ok);
    return rep;
}

// ---- io --------------------------------------------------------------

CheckReport suite_io(std::uint64_t seed) {
    CheckReport rep("io");
    bool roundtrip = true;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::derive(seed, 10000 + i);
        GroupSpec R = GroupSpec::real_add();
        IntervalSet s = gen::interval_set(rng, Kind::half_open, 3, 9, 8);
        roundtrip = roundtrip && set_from_json(set_to_json(SetValue(s)), R) == SetValue(s);
        RectUnion ru = gen::rect_union(rng, 3, 6, 4);
        roundtrip = roundtrip &&
                    product_set_from_json(rect_union_to_json(ru), R) == ProductSet(ru);
        SimpleFunc f = gen::simple_func(rng, R, 3, 6, 4);
        roundtrip = roundtrip && simple_func_from_json(simple_func_to_json(f), R) == f;
    }
    expect(rep, "JSON round-trips the schema types", roundtrip);

    {
        bool rejected = false;
        try {
            Rational::parse("1/0");
        } catch (const std::exception&) {
            rejected = true;
        }
        expect(rep, "malformed rational 1/0 is rejected", rejected);
    }
    return rep;
}

}  // namespace

CheckReport selftest(std::uint64_t seed, int threads) {
    std::vector<std::pair<std::string, Suite>> suites = {
        {"numeric", suite_numeric}, {"setalg", suite_setalg},   {"group", suite_group},
        {"measure", suite_measure}, {"haar", suite_haar},       {"product", suite_product},
        {"uniqueness", suite_uniqueness}, {"io", suite_io},
    };

    std::vector<CheckReport> results(suites.size());
    if (threads > 1) {
        std::vector<std::future<CheckReport>> futures;
        for (auto& [name, fn] : suites)
            futures.push_back(std::async(std::launch::async, fn, seed));
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < suites.size(); ++i) results[i] = suites[i].second(seed);
    }

    CheckReport merged("selftest");
    merged.seed = seed;
    for (const auto& r : results) merged.merge(r);
    return merged;
}

}  // namespace exm
