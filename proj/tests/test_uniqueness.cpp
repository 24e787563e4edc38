#include "exm/generators.hpp"
#include "exm/uniqueness.hpp"

#include <doctest.h>

using namespace exm;

namespace {
const GroupSpec R = GroupSpec::real_add();
const GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());

IntervalSet ho(Rational lo, Rational hi) {
    return IntervalSet::single(Kind::half_open, std::move(lo), std::move(hi));
}
IntervalSet cl(Rational lo, Rational hi) { return IntervalSet::single(Kind::closed, lo, hi); }
MeasureSpec leb(Rational c = Rational(1)) { return MeasureSpec::lebesgue(R, std::move(c)); }
ExtNonneg fin(long long n, long long d = 1) { return ExtNonneg::finite(Rational(n, d)); }
}

TEST_CASE("transform preimages on finite carriers match brute force") {
    MeasureSpec cnt = MeasureSpec::counting(S3);
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        FinitePairSet A = gen::finite_pair_set(rng, 6);
        for (TransformKind k :
             {TransformKind::S, TransformKind::T, TransformKind::R, TransformKind::S_inv}) {
            // the transforms are bijections, so preimages preserve cardinality
            FinitePairSet pre = finite_transform_preimage(S3, k, A);
            CHECK(pre.size() == A.size());
            CHECK(transform_preimage_measure(S3, k, cnt, cnt, A) == fin(A.size()));
        }
    }
}

TEST_CASE("transform preimages on the real line") {
    ProductSet unit = RectUnion::rect(0, 1, ho(0, 1));
    CHECK(transform_preimage_measure(R, TransformKind::S, leb(), leb(), unit) == fin(1));
    CHECK(transform_preimage_measure(R, TransformKind::T, leb(), leb(), unit) == fin(1));
    CHECK(transform_preimage_measure(R, TransformKind::S, leb(), leb(), ProductSet(RectUnion())) ==
          fin(0));
    // non-invariant factor on a continuous carrier is refused
    CHECK_THROWS_AS(transform_preimage_measure(R, TransformKind::S, leb(),
                                               MeasureSpec::dirac(R, Element(Rational(0))), unit),
                    unsupported_error);
}

TEST_CASE("measure preserving check") {
    // exhaustive over all subsets of (Z/2)^2
    GroupSpec Z2 = GroupSpec::finite(CayleyTable::cyclic(2));
    MeasureSpec cnt2 = MeasureSpec::counting(Z2);
    std::vector<ProductSet> all;
    for (std::uint64_t bits = 0; bits < 16; ++bits)
        all.push_back(FinitePairSet::from_bits(2, bits));
    CHECK(measure_preserving_check(Z2, cnt2, cnt2, all).all_pass());

    // real rectangles under scaled Lebesgue
    std::vector<ProductSet> rects = {RectUnion::rect(0, 1, ho(0, 1)),
                                     RectUnion::rect(-2, 1, ho(1, 4)),
                                     RectUnion::from_rects({{ho(0, 2), ho(0, 1)},
                                                            {ho(0, 1), ho(1, 2)}})};
    CHECK(measure_preserving_check(R, leb(), leb(Rational(5, 2)), rects).all_pass());

    // dirac nu on a continuous carrier: explicit unsupported verdict
    CheckReport rep = measure_preserving_check(R, leb(), MeasureSpec::dirac(R, Element(Rational(0))),
                                               {RectUnion::rect(0, 1, ho(0, 1))});
    CHECK(rep.unsupported_count() == 1);
    CHECK(rep.fail_count() == 0);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("right translate check") {
    CheckReport rep = right_translate_check(R, leb(), ho(0, 1),
                                            {Element(Rational(5)), Element(Rational(-7, 3))});
    CHECK(rep.all_pass());

    MeasureSpec cnt = MeasureSpec::counting(S3);
    SetValue A = FiniteSet::of(6, {0, 4});
    CheckReport frep = right_translate_check(S3, cnt, A, {Element(1), Element(3)});
    CHECK(frep.all_pass());
    for (const auto& c : frep.cases)
        for (const auto& [k, v] : c.fields)
            if (k == "mu_Ax") CHECK(std::get<ExtNonneg>(v) == fin(2));  // |Ax| = |A|

    CHECK_THROWS_AS(right_translate_check(R, leb(), IntervalSet::empty(Kind::half_open),
                                          {Element(Rational(1))}),
                    std::domain_error);
}

TEST_CASE("key identity on documented cases") {
    // mu = nu = Lebesgue, K = [0,1], f = chi_[0,1)
    SimpleFunc f = SimpleFunc::indicator(ho(0, 1));
    CHECK(key_identity_check(R, leb(), leb(), cl(0, 1), f).all_pass());

    // nu = 3 Lebesgue, mu = Lebesgue, K = [0,2], f = chi_[0,4)
    SimpleFunc f2 = SimpleFunc::indicator(ho(0, 4));
    CheckReport rep = key_identity_check(R, leb(), leb(Rational(3)), cl(0, 2), f2);
    CHECK(rep.all_pass());
    for (const auto& [k, v] : rep.cases[0].fields)
        if (k == "rhs") CHECK(std::get<ExtNonneg>(v) == fin(4));

    // S3 with counting on both sides, K the full carrier
    Rng rng(31);
    MeasureSpec cnt = MeasureSpec::counting(S3);
    for (int i = 0; i < 30; ++i) {
        SimpleFunc rf = gen::simple_func(rng, S3, 4, 5, 3);
        CHECK(key_identity_check(S3, cnt, cnt, FiniteSet::full(6), rf).all_pass());
    }

    // hypothesis nu(K) > 0 is enforced
    CHECK_THROWS_AS(key_identity_check(R, leb(), leb(), cl(2, 2), f), std::domain_error);
    CHECK_THROWS_AS(
        key_identity_check(R, leb(), MeasureSpec::lebesgue(R, Rational(0)), cl(0, 1), f),
        std::domain_error);
}

TEST_CASE("uniqueness against the haar estimate") {
    PositiveCompact K0(R, cl(0, 1));
    EpsSchedule sched = EpsSchedule::dyadic(10);
    CheckReport rep = uniqueness_check(R, leb(Rational(5, 2)), K0,
                                       {SetValue(ho(0, 3)), SetValue(ho(-1, Rational(1, 2)))}, 10,
                                       sched, Rational(0));
    CHECK(rep.all_pass());

    // finite groups: exact at zero tolerance on every subset
    PositiveCompact K0f(S3, FiniteSet::full(6));
    MeasureSpec cnt = MeasureSpec::counting(S3);
    std::vector<SetValue> subsets;
    for (std::uint32_t m = 0; m < 64; ++m) subsets.push_back(FiniteSet(6, m));
    CHECK(uniqueness_check(S3, cnt, K0f, subsets, 4, EpsSchedule::dyadic(4), Rational(0)).all_pass());

    // the zero measure passes trivially
    CHECK(uniqueness_check(R, leb(Rational(0)), K0, {SetValue(ho(0, 3))}, 8,
                           EpsSchedule::dyadic(8), Rational(0))
              .all_pass());
}

TEST_CASE("inversion duality") {
    std::vector<InvarianceCase> cases;
    Rng rng(41);
    for (int i = 0; i < 50; ++i)
        cases.push_back({Element(rng.rational(6, 4)), gen::group_set(rng, R, Kind::half_open)});

    CHECK(inversion_duality_check(R, leb(Rational(2)), cases).no_failures());

    // dirac at g != e: the involution and the equivalence still hold while
    // invariance itself fails
    MeasureSpec d = MeasureSpec::dirac(R, Element(Rational(3)));
    CheckReport rep = inversion_duality_check(R, d, cases);
    CHECK(rep.no_failures());
    bool saw_noninvariant = false;
    for (const auto& c : rep.cases)
        for (const auto& [k, v] : c.fields)
            if (k == "left_invariant" && std::holds_alternative<bool>(v) && !std::get<bool>(v))
                saw_noninvariant = true;
    CHECK(saw_noninvariant);

    CHECK(inverted_measure(d).atom() == Element(Rational(-3)));
    CHECK(inversion_duality_check(S3, MeasureSpec::counting(S3),
                                  {{Element(2), SetValue(FiniteSet::of(6, {1, 3}))}})
              .no_failures());
}
