// Acceptance suite: every criterion prints exactly one [PASS]/[FAIL] line;
// the exit code is the number of failing criteria.

#include "exm/generators.hpp"
#include "exm/json_io.hpp"
#include "exm/selftest.hpp"
#include "exm/uniqueness.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

using namespace exm;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

IntervalSet cl(Rational lo, Rational hi) { return IntervalSet::single(Kind::closed, lo, hi); }
IntervalSet ho(Rational lo, Rational hi) { return IntervalSet::single(Kind::half_open, lo, hi); }

const GroupSpec R = GroupSpec::real_add();
const GroupSpec P = GroupSpec::pos_mul();

// ---------------------------------------------------------------------

void criterion_1_haar_vs_lebesgue() {
    PositiveCompact K0(R, cl(0, 1));
    bool ok = true;
    std::ostringstream detail;
    for (const Rational& L : {Rational(2), Rational(3), Rational(7, 2)}) {
        for (int n = 4; n <= 10; ++n) {
            Rational h = prehaar(R, K0, shrink_basis(R, n), cl(0, L));
            Rational bound = Rational(4) * Rational(1, 2).pow(n - 1);
            ok = ok && (h - L).abs() <= bound;
        }
    }
    Rational closed_form = prehaar(R, K0, shrink_basis(R, 10), cl(0, 2));
    ok = ok && closed_form == Rational(1025, 513);
    detail << "h_{V10}([0,2]) = " << closed_form.to_string();
    criterion(1, "prehaar tracks Lebesgue length on (R,+) with the derived bound", ok,
              detail.str());
}

void criterion_2_pos_mul() {
    PositiveCompact K0(P, cl(1, 2));
    Rational h = prehaar(P, K0, shrink_basis(P, 10), cl(1, 4));
    double reference = std::log(4.0) / std::log(2.0);
    bool ok = std::abs(h.to_double() - reference) <= 0.02;
    std::ostringstream detail;
    detail << "value " << h.to_decimal_string(8) << " vs reference " << reference;
    criterion(2, "prehaar on ((0,inf),*) approaches the log-length ratio", ok, detail.str());
}

void criterion_3_finite_groups() {
    bool ok = true;
    EpsSchedule sched = EpsSchedule::dyadic(4);
    struct Setup {
        GroupSpec G;
        std::vector<std::uint32_t> k0_masks;
    };
    std::vector<Setup> setups = {
        {GroupSpec::finite(CayleyTable::symmetric3()), {0x3f, 0x03}},
        {GroupSpec::finite(CayleyTable::cyclic(5)), {0x1f, 0x03}},
    };
    for (const auto& s : setups) {
        int n = s.G.table().n;
        for (std::uint32_t k0_mask : s.k0_masks) {
            PositiveCompact K0(s.G, FiniteSet(n, k0_mask));
            long long k0_size = FiniteSet(n, k0_mask).size();
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                FiniteSet A(n, m);
                HaarEstimateResult est = haar_measure_estimate(s.G, K0, A, 4, sched);
                ok = ok && est.bracket.is_exact() &&
                     est.bracket.lower == ExtNonneg::finite(Rational(A.size(), k0_size));
            }
        }
    }
    criterion(3, "haar estimate equals counting/|K0| exhaustively on S3 and Z/5", ok);
}

PositiveCompact reference_compact(const GroupSpec& G) {
    switch (G.type()) {
        case GroupType::real_add: return PositiveCompact(G, cl(0, 1));
        case GroupType::pos_mul: return PositiveCompact(G, cl(1, 2));
        case GroupType::int_add: return PositiveCompact(G, IntSet::finite({0, 1, 2, 3}));
        default: return PositiveCompact(G, FiniteSet::full(G.table().n));
    }
}

SetValue seeded_compact(Rng& rng, const GroupSpec& G) {
    switch (G.type()) {
        case GroupType::int_add: {
            std::vector<std::int64_t> e;
            long long k = rng.uniform(1, 5);
            for (long long i = 0; i < k; ++i) e.push_back(rng.uniform(-10, 10));
            return IntSet::finite(std::move(e));
        }
        case GroupType::finite:
            return gen::finite_set(rng, G.table().n, /*nonempty=*/true);
        default:
            return gen::interval_set(rng, Kind::closed, 3, 6, 4,
                                     G.type() == GroupType::pos_mul);
    }
}

void criterion_4_lemma_suite() {
    std::vector<GroupSpec> groups = {R, P, GroupSpec::finite(CayleyTable::symmetric3()),
                                     GroupSpec::finite(CayleyTable::cyclic(5)),
                                     GroupSpec::int_add()};
    bool ok = true;
    std::ostringstream detail;
    for (const GroupSpec& G : groups) {
        PositiveCompact K0 = reference_compact(G);
        for (int n = 1; n <= 4; ++n) {
            std::vector<PrehaarCase> cases;
            for (int i = 0; i < 50; ++i) {
                Rng rng = Rng::derive(9100 + 17 * n, i);
                cases.push_back({seeded_compact(rng, G), seeded_compact(rng, G),
                                 gen::element(rng, G)});
            }
            CheckReport rep =
                prehaar_properties_check(G, K0, shrink_basis(G, G.is_continuous() ? n + 1 : 0),
                                         cases);
            if (!rep.all_pass()) {
                ok = false;
                detail << group_type_name(G.type()) << " prehaar bullets failed; ";
            }
        }

        // chaar bullets: residual bounded by the reported Cauchy gap
        std::vector<PrehaarCase> chaar_cases;
        std::vector<SetValue> involved;
        for (int i = 0; i < 20; ++i) {
            Rng rng = Rng::derive(9300, i);
            SetValue K = seeded_compact(rng, G);
            SetValue K2 = seeded_compact(rng, G);
            chaar_cases.push_back({K, K2, gen::element(rng, G)});
            involved.push_back(K);
            involved.push_back(K2);
            involved.push_back(sv_union(K, K2));
        }
        int n_max = G.is_continuous() ? 8 : 2;
        ChaarEstimate est = chaar_estimate(G, K0, involved, n_max);
        CheckReport rep = chaar_properties_check(G, K0, chaar_cases, n_max, est.cauchy_gap);
        if (!rep.all_pass()) {
            ok = false;
            detail << group_type_name(G.type()) << " chaar bullets failed; ";
        }
    }
    criterion(4, "prehaar and chaar lemma bullets on 200 seeded cases per group", ok,
              detail.str());
}

void criterion_5_extension_pipeline() {
    PositiveCompact K0(R, cl(0, 1));
    EpsSchedule sched = EpsSchedule::dyadic(8);
    ContentFn chaar8 = content_from_chaar(R, K0, 8);
    ContentFn len = content_from_length();
    bool sandwich_ok = true, cara_ok = true, monotone_ok = true;

    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::derive(9500, i);
        IntervalSet K = gen::interval_set(rng, Kind::closed, 3, 6, 4);
        if (K.is_empty()) continue;
        const ContentFn& h = (i % 2 == 0) ? chaar8 : len;

        OuterMeasureResult interior = outer_measure_from_content(R, h, K.interior(), sched);
        OuterMeasureResult outer = outer_measure_from_content(R, h, SetValue(K), sched);
        ExtNonneg hK = h.eval(SetValue(K));
        sandwich_ok = sandwich_ok && interior.bracket.lower <= hK && hK <= outer.bracket.upper;

        for (const auto& seq : {interior.sequence, outer.sequence})
            for (std::size_t j = 1; j < seq.size(); ++j)
                monotone_ok = monotone_ok && seq[j] <= seq[j - 1];

        InnerContentResult inner = inner_content(R, h, iset_fatten(K, Rational(1, 3)), sched);
        for (std::size_t j = 1; j < inner.sequence.size(); ++j)
            monotone_ok = monotone_ok && inner.sequence[j - 1] <= inner.sequence[j];
    }

    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng::derive(9600, i);
        SetValue A = gen::interval_set(rng, Kind::half_open, 2, 5, 4);
        SetValue probe = gen::interval_set(rng, Kind::half_open, 2, 5, 4);
        const ContentFn& h = (i % 2 == 0) ? chaar8 : len;
        CheckReport rep = caratheodory_check(R, h, A, {probe}, sched, Rational(0));
        // the criterion allows 2x the combined bracket gap; the operation
        // already bounds by 1x, so extract and re-check at 2x
        for (const auto& c : rep.cases) {
            Rational residual(0), bound(0);
            for (const auto& [k, v] : c.fields) {
                if (k == "residual") residual = std::get<ExtNonneg>(v).value();
                if (k == "bound") bound = std::get<ExtNonneg>(v).value();
            }
            cara_ok = cara_ok && residual <= Rational(2) * bound;
        }
    }
    criterion(5, "sandwich, caratheodory splitting, and monotone brackets",
              sandwich_ok && cara_ok && monotone_ok);
}

void criterion_6_product_suite() {
    bool ok = true;
    std::ostringstream detail;
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        Rng rng = Rng::derive(9700, i);
        MeasureSpec mu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));
        MeasureSpec nu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3));

        IntervalSet A = gen::interval_set(rng, Kind::half_open, 2, 6, 4);
        IntervalSet B = gen::interval_set(rng, Kind::half_open, 2, 6, 4);
        ProductSet AB = RectUnion::from_rects({{A, B}});
        ok = ok && prod_measure(mu, nu, AB) ==
                       measure_eval(mu, SetValue(A)) * measure_eval(nu, SetValue(B));

        ProductSet C = gen::rect_union(rng, 3, 6, 4);
        ok = ok && symmetric_formula_check(mu, nu, C).all_pass();

        ok = ok && tonelli_check(mu, nu, gen::simple_func2d(rng, 3)).all_pass();

        StepFuncVec2D f = gen::step_func2d(rng, 2, 3);
        ok = ok && fubini_integrability_check(mu, nu, f).all_pass();
        ok = ok && fubini_check(mu, nu, f).all_pass();
        ++checked;
        if (!ok) break;
    }
    if (!ok) detail << "failed among the " << checked << " seeded cases";

    // exhaustive on S3 x S3: every function supported on up to 3 atomic
    // cells, with values from a fixed two-element set per slot
    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
    MeasureSpec cnt = MeasureSpec::counting(S3);
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) cells.emplace_back(x, y);
    const ExtNonneg values[2] = {ExtNonneg::finite(1), ExtNonneg::finite(Rational(5, 2))};
    const VecQ vecs[2] = {VecQ({Rational(1), Rational(-2)}), VecQ({Rational(3), Rational(5)})};
    long long exhaustive = 0;
    for (std::size_t a = 0; a < cells.size() && ok; ++a)
        for (std::size_t b = a + 1; b < cells.size() && ok; ++b)
            for (std::size_t c = b + 1; c < cells.size() && ok; ++c)
                for (int vbits = 0; vbits < 8 && ok; ++vbits) {
                    auto cell = [&](std::size_t idx) {
                        FinitePairSet s(6);
                        s.insert(cells[idx].first, cells[idx].second);
                        return s;
                    };
                    SimpleFunc2D f({{cell(a), values[(vbits >> 0) & 1]},
                                    {cell(b), values[(vbits >> 1) & 1]},
                                    {cell(c), values[(vbits >> 2) & 1]}});
                    TonelliValues tv = tonelli_values(cnt, cnt, f);
                    ok = ok && tv.double_integral == tv.iterated_xy &&
                         tv.iterated_xy == tv.iterated_yx;
                    if (vbits < 4) {
                        StepFuncVec2D g(2, {{cell(a), vecs[(vbits >> 0) & 1]},
                                            {cell(b), vecs[(vbits >> 1) & 1]},
                                            {cell(c), vecs[0]}});
                        FubiniValues fv = fubini_values(cnt, cnt, g);
                        ok = ok && fv.double_integral == fv.iterated_xy &&
                             fv.iterated_xy == fv.iterated_yx;
                    }
                    ++exhaustive;
                }
    if (!ok && detail.str().empty()) detail << "exhaustive S3 x S3 family failed";
    criterion(6, "rectangle law, transpose, Tonelli and Fubini exact (500 seeded + exhaustive)",
              ok, detail.str());
}

void criterion_7_section6_suite() {
    bool ok = true;
    std::ostringstream detail;

    // exhaustive S/T preservation over all subsets of G x G for |G| <= 4
    std::vector<GroupSpec> small = {GroupSpec::finite(CayleyTable::cyclic(2)),
                                    GroupSpec::finite(CayleyTable::cyclic(3)),
                                    GroupSpec::finite(CayleyTable::cyclic(4)),
                                    GroupSpec::finite(CayleyTable::klein4())};
    for (const GroupSpec& G : small) {
        int n = G.table().n;
        MeasureSpec cnt = MeasureSpec::counting(G);
        for (std::uint64_t bits = 0; bits < (1ull << (n * n)); ++bits) {
            FinitePairSet A = FinitePairSet::from_bits(n, bits);
            ExtNonneg base = prod_measure(cnt, cnt, A);
            if (transform_preimage_measure(G, TransformKind::S, cnt, cnt, A) != base ||
                transform_preimage_measure(G, TransformKind::T, cnt, cnt, A) != base) {
                ok = false;
                detail << "S/T failed on |G|=" << n << "; ";
                break;
            }
        }
    }

    // 1000 seeded subsets of S3 x S3
    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
    MeasureSpec cnt3 = MeasureSpec::counting(S3);
    for (int i = 0; i < 1000 && ok; ++i) {
        Rng rng = Rng::derive(9800, i);
        FinitePairSet A = gen::finite_pair_set(rng, 6);
        ExtNonneg base = prod_measure(cnt3, cnt3, A);
        ok = ok && transform_preimage_measure(S3, TransformKind::S, cnt3, cnt3, A) == base &&
             transform_preimage_measure(S3, TransformKind::T, cnt3, cnt3, A) == base;
    }
    if (!ok && detail.str().empty()) detail << "seeded S3 subsets failed; ";

    // slice formula exact on real rectangles
    {
        MeasureSpec mu = MeasureSpec::lebesgue(R, Rational(1));
        MeasureSpec nu = MeasureSpec::lebesgue(R, Rational(7, 3));
        std::vector<ProductSet> rects = {
            RectUnion::rect(0, 1, ho(0, 1)), RectUnion::rect(-3, 2, ho(1, 2)),
            RectUnion::from_rects({{ho(0, 2), ho(0, 1)}, {ho(0, 1), ho(1, 2)}})};
        ok = ok && measure_preserving_check(R, mu, nu, rects).all_pass();
    }

    // key identity on 200 seeded invariant cases
    for (int i = 0; i < 150 && ok; ++i) {
        Rng rng = Rng::derive(9900, i);
        MeasureSpec mu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3) + Rational(1, 4));
        MeasureSpec nu = MeasureSpec::lebesgue(R, rng.nonneg_rational(4, 3) + Rational(1, 4));
        Rational lo = rng.rational(5, 3);
        SetValue K = cl(lo, lo + Rational(1, 2) + rng.nonneg_rational(3, 2));
        ok = ok && key_identity_check(R, mu, nu, K, gen::simple_func(rng, R, 3, 5, 3)).all_pass();
    }
    for (int i = 0; i < 50 && ok; ++i) {
        Rng rng = Rng::derive(9950, i);
        ok = ok && key_identity_check(S3, cnt3, cnt3, gen::finite_set(rng, 6, true),
                                      gen::simple_func(rng, S3, 4, 5, 3))
                       .all_pass();
    }
    if (!ok && detail.str().empty()) detail << "key identity failed; ";

    // uniqueness residual within nu(K0) * bracket width on R; exact on
    // finite groups
    {
        PositiveCompact K0(R, cl(0, 1));
        EpsSchedule sched = EpsSchedule::dyadic(10);
        std::vector<SetValue> sets;
        for (int i = 0; i < 40; ++i) {
            Rng rng = Rng::derive(9990, i);
            sets.push_back(gen::interval_set(rng, Kind::half_open, 2, 4, 4));
        }
        MeasureSpec nu = MeasureSpec::lebesgue(R, Rational(5, 2));
        ok = ok && uniqueness_check(R, nu, K0, sets, 10, sched, Rational(0)).all_pass();

        PositiveCompact K0f(S3, FiniteSet::full(6));
        std::vector<SetValue> subsets;
        for (std::uint32_t m = 0; m < 64; ++m) subsets.push_back(FiniteSet(6, m));
        ok = ok && uniqueness_check(S3, cnt3, K0f, subsets, 2, EpsSchedule::dyadic(2), Rational(0))
                       .all_pass();

        GroupSpec Z5 = GroupSpec::finite(CayleyTable::cyclic(5));
        PositiveCompact K0z(Z5, FiniteSet::of(5, {0, 1}));
        std::vector<SetValue> zsets;
        for (std::uint32_t m = 0; m < 32; ++m) zsets.push_back(FiniteSet(5, m));
        ok = ok && uniqueness_check(Z5, MeasureSpec::counting(Z5), K0z, zsets, 2,
                                    EpsSchedule::dyadic(2), Rational(0))
                       .all_pass();
    }
    if (!ok && detail.str().empty()) detail << "uniqueness residual failed";
    criterion(7, "S/T preservation, key identity, and uniqueness residuals", ok, detail.str());
}

void criterion_8_negative_controls() {
    bool ok = true;
    std::ostringstream detail;

    // dirac fails left invariance on at least one seeded case
    MeasureSpec dirac = MeasureSpec::dirac(R, Element(Rational(0)));
    std::vector<InvarianceCase> cases;
    for (int i = 0; i < 40; ++i) {
        Rng rng = Rng::derive(10100, i);
        cases.push_back({Element(rng.rational(6, 3)), gen::group_set(rng, R, Kind::half_open)});
    }
    if (left_invariance_check(dirac, cases).fail_count() == 0) {
        ok = false;
        detail << "dirac unexpectedly invariant; ";
    }

    // non-sigma-finite product input is rejected
    bool rejected = false;
    try {
        prod_measure(MeasureSpec::counting(R), MeasureSpec::lebesgue(R, Rational(1)),
                     ProductSet(RectUnion()));
    } catch (const std::domain_error&) {
        rejected = true;
    }
    if (!rejected) {
        ok = false;
        detail << "non-sigma-finite product accepted; ";
    }

    // key identity rejects nu(K) = 0
    bool key_rejected = false;
    try {
        key_identity_check(R, MeasureSpec::lebesgue(R, Rational(1)),
                           MeasureSpec::lebesgue(R, Rational(0)), cl(0, 1),
                           SimpleFunc::indicator(ho(0, 1)));
    } catch (const std::domain_error&) {
        key_rejected = true;
    }
    if (!key_rejected) {
        ok = false;
        detail << "key identity accepted nu(K)=0; ";
    }

    // the zero measure passes uniqueness trivially
    PositiveCompact K0(R, cl(0, 1));
    bool zero_ok = uniqueness_check(R, MeasureSpec::lebesgue(R, Rational(0)), K0,
                                    {SetValue(ho(0, 3))}, 8, EpsSchedule::dyadic(8), Rational(0))
                       .all_pass();
    if (!zero_ok) {
        ok = false;
        detail << "zero measure failed uniqueness";
    }
    criterion(8, "negative controls behave as specified", ok, detail.str());
}

void criterion_9_determinism() {
    CheckReport a = selftest(42, 1);
    CheckReport b = selftest(42, 1);
    CheckReport c = selftest(42, 4);
    std::string ja = report_to_json(a, "selftest --seed 42");
    std::string jb = report_to_json(b, "selftest --seed 42");
    std::string jc = report_to_json(c, "selftest --seed 42");
    bool ok = ja == jb && ja == jc && a.all_pass();
    criterion(9, "selftest with seed 42 is byte-identical across runs and thread counts", ok);
}

}  // namespace

int main() {
    criterion_1_haar_vs_lebesgue();
    criterion_2_pos_mul();
    criterion_3_finite_groups();
    criterion_4_lemma_suite();
    criterion_5_extension_pipeline();
    criterion_6_product_suite();
    criterion_7_section6_suite();
    criterion_8_negative_controls();
    criterion_9_determinism();
    return failures;
}
