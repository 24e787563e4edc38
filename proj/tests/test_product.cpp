#include "exm/generators.hpp"
#include "exm/product.hpp"

#include <doctest.h>

using namespace exm;

namespace {
const GroupSpec R = GroupSpec::real_add();
const GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
const GroupSpec Z = GroupSpec::int_add();

IntervalSet ho(Rational lo, Rational hi) {
    return IntervalSet::single(Kind::half_open, std::move(lo), std::move(hi));
}
MeasureSpec leb(Rational c = Rational(1)) { return MeasureSpec::lebesgue(R, std::move(c)); }
ExtNonneg fin(long long n, long long d = 1) { return ExtNonneg::finite(Rational(n, d)); }

RectUnion l_shape() {
    return RectUnion::from_rects({{ho(0, 2), ho(0, 1)}, {ho(0, 1), ho(1, 2)}});
}
}

TEST_CASE("slice measure function") {
    SimpleFunc f = slice_measure_fn(leb(), RectUnion::rect(0, 1, ho(0, 3)));
    REQUIRE(f.pieces().size() == 1);
    CHECK(f.pieces()[0].set == SetValue(ho(0, 1)));
    CHECK(f.pieces()[0].value == fin(3));

    CHECK(slice_measure_fn(leb(), RectUnion()).is_zero());

    SimpleFunc g = slice_measure_fn(leb(), l_shape());  // 2 on [0,1), 1 on [1,2)
    REQUIRE(g.pieces().size() == 2);
    CHECK(simple_value_at(R, g, Element(Rational(1, 2))) == fin(2));
    CHECK(simple_value_at(R, g, Element(Rational(3, 2))) == fin(1));

    CHECK_THROWS_AS(slice_measure_fn(MeasureSpec::counting(R), RectUnion()), std::domain_error);
}

TEST_CASE("product measure") {
    CHECK(prod_measure(leb(), leb(), RectUnion::rect(0, 1, ho(0, 3))) == fin(3));
    CHECK(prod_measure(leb(), leb(), l_shape()) == fin(3));
    CHECK(prod_measure(leb(), leb(), RectUnion()) == fin(0));
    CHECK_THROWS_AS(prod_measure(MeasureSpec::counting(R), leb(), ProductSet(RectUnion())),
                    std::domain_error);
}

TEST_CASE("symmetric formula") {
    CHECK(symmetric_formula_check(leb(), leb(Rational(2)),
                                  RectUnion::from_rects({{ho(0, 2), ho(1, 3)}}))
              .all_pass());
    CHECK(symmetric_formula_check(leb(), leb(), l_shape()).all_pass());
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        MeasureSpec mu = leb(rng.nonneg_rational(4, 3));
        MeasureSpec nu = leb(rng.nonneg_rational(4, 3));
        CHECK(symmetric_formula_check(mu, nu, gen::rect_union(rng, 3, 8, 4)).all_pass());
    }
}

TEST_CASE("tonelli on documented cases") {
    SimpleFunc2D unit({{RectUnion::rect(0, 1, ho(0, 1)), fin(1)}});
    TonelliValues v = tonelli_values(leb(), leb(), unit);
    CHECK(v.double_integral == fin(1));
    CHECK(v.iterated_xy == fin(1));
    CHECK(v.iterated_yx == fin(1));

    SimpleFunc2D two_pieces({{RectUnion::rect(0, 1, ho(0, 2)), fin(2)},
                             {RectUnion::rect(1, 2, ho(0, 1)), fin(3)}});
    TonelliValues w = tonelli_values(leb(), leb(), two_pieces);
    CHECK(w.double_integral == fin(7));  // 2*2 + 3*1
    CHECK(tonelli_check(leb(), leb(), two_pieces).all_pass());
    // the inner-integral witness is the step function 4 on [0,1), 3 on [1,2)
    CHECK(simple_value_at(R, w.witness_x, Element(Rational(1, 2))) == fin(4));
    CHECK(simple_value_at(R, w.witness_x, Element(Rational(3, 2))) == fin(3));
    CHECK(simple_value_at(R, w.witness_y, Element(Rational(3, 2))) == fin(2));

    SimpleFunc2D infinite({{RectUnion::rect(0, 1, ho(0, 1)), ExtNonneg::infinity()}});
    TonelliValues inf_v = tonelli_values(leb(), leb(), infinite);
    CHECK(inf_v.double_integral == ExtNonneg::infinity());
    CHECK(inf_v.iterated_xy == ExtNonneg::infinity());
    CHECK(inf_v.iterated_yx == ExtNonneg::infinity());
    CHECK(tonelli_check(leb(), leb(), infinite).all_pass());
}

TEST_CASE("fubini part 1 equivalence") {
    // bounded support over Lebesgue^2: integrable, conditions hold
    StepFuncVec2D f(2, {{RectUnion::rect(0, 1, ho(0, 1)), VecQ({Rational(1), Rational(-1)})}});
    FubiniPart1 p = fubini_part1(leb(), leb(), f);
    CHECK(p.integrable_product);
    CHECK(p.slices_ae_integrable);
    CHECK(p.iterated_norm_integrable);
    CHECK(fubini_integrability_check(leb(), leb(), f).all_pass());

    // zero function integrable both ways
    CHECK(fubini_integrability_check(leb(), leb(), StepFuncVec2D(1)).all_pass());

    // counting slices of an infinite set: f_x non-integrable on a set of
    // positive measure, so f is not integrable; the equivalence still holds
    MeasureSpec cnt = MeasureSpec::counting(Z);
    StepFuncVec2D g(2, {{IntPairSlabs({{0, IntSet::all()}}), VecQ({Rational(1), Rational(0)})}});
    FubiniPart1 q = fubini_part1(cnt, cnt, g);
    CHECK_FALSE(q.integrable_product);
    CHECK_FALSE(q.slices_ae_integrable);
    CHECK(fubini_integrability_check(cnt, cnt, g).all_pass());
    CHECK_THROWS_AS(fubini_values(cnt, cnt, g), std::domain_error);
}

TEST_CASE("fubini three-way equality") {
    StepFuncVec2D f(2, {{RectUnion::rect(0, 1, ho(0, 1)), VecQ({Rational(1), Rational(1)})},
                        {RectUnion::rect(1, 2, ho(0, 1)), VecQ({Rational(-2), Rational(0)})}});
    FubiniValues v = fubini_values(leb(), leb(), f);
    CHECK(v.double_integral == VecQ({Rational(-1), Rational(1)}));
    CHECK(v.iterated_xy == v.double_integral);
    CHECK(v.iterated_yx == v.double_integral);
    CHECK(fubini_check(leb(), leb(), f).all_pass());

    FubiniValues z = fubini_values(leb(), leb(), StepFuncVec2D(2));
    CHECK(z.double_integral == VecQ::zero(2));
}

TEST_CASE("fubini and tonelli on randomized step functions") {
    Rng rng(8);
    for (int i = 0; i < 120; ++i) {
        MeasureSpec mu = leb(rng.nonneg_rational(4, 3));
        MeasureSpec nu = leb(rng.nonneg_rational(4, 3));
        SimpleFunc2D f = gen::simple_func2d(rng, 3);
        CHECK(tonelli_check(mu, nu, f).all_pass());
        StepFuncVec2D g = gen::step_func2d(rng, 2, 3);
        CHECK(fubini_integrability_check(mu, nu, g).all_pass());
        CHECK(fubini_check(mu, nu, g).all_pass());

        // independent oracle: sum of value * rectangle area over the slabs
        FubiniValues v = fubini_values(mu, nu, g);
        VecQ expected = VecQ::zero(2);
        for (const auto& p : g.pieces()) {
            Rational area(0);
            for (const auto& s : std::get<RectUnion>(p.region).slabs()) {
                Rational ylen(0);
                for (const auto& [lo, hi] : s.y.intervals()) ylen += hi - lo;
                area += (s.x_hi - s.x_lo) * ylen;
            }
            expected += (mu.scale() * nu.scale() * area) * p.value;
        }
        CHECK(v.double_integral == expected);
    }
}

TEST_CASE("vector and scalar product integrals agree on nonnegative functions") {
    Rng rng(14);
    for (int i = 0; i < 60; ++i) {
        MeasureSpec mu = leb(rng.nonneg_rational(4, 3));
        MeasureSpec nu = leb(rng.nonneg_rational(4, 3));
        StepFuncVec2D f = gen::step_func2d(rng, 1, 3);
        bool nonneg = true;
        std::vector<SimpleFunc2D::Piece> abs_pieces;
        for (const auto& p : f.pieces()) {
            if (p.value.comps[0].sign() < 0) nonneg = false;
            abs_pieces.push_back({p.region, ExtNonneg::finite(p.value.comps[0].abs())});
        }
        if (!nonneg) continue;
        ExtNonneg scalar = tonelli_values(mu, nu, SimpleFunc2D(abs_pieces)).double_integral;
        VecQ vec = fubini_values(mu, nu, f).double_integral;
        REQUIRE(scalar.is_finite());
        CHECK(scalar.value() == vec.comps[0]);
    }
}

TEST_CASE("finite carrier products") {
    MeasureSpec cnt = MeasureSpec::counting(S3);
    FinitePairSet A(6);
    A.insert(0, 1);
    A.insert(3, 2);
    A.insert(3, 4);
    CHECK(prod_measure(cnt, cnt, A) == fin(3));
    CHECK(symmetric_formula_check(cnt, cnt, A).all_pass());

    SimpleFunc2D f({{ProductSet(A), fin(5, 2)}});
    TonelliValues v = tonelli_values(cnt, cnt, f);
    CHECK(v.double_integral == fin(15, 2));
    CHECK(tonelli_check(cnt, cnt, f).all_pass());

    // dirac is sigma-finite and satisfies the product formula too
    MeasureSpec d = MeasureSpec::dirac(S3, Element(3));
    CHECK(prod_measure(d, cnt, A) == fin(2));  // slice at x = 3 has two points
}

TEST_CASE("integer carrier products") {
    MeasureSpec cnt = MeasureSpec::counting(Z);
    IntPairSlabs A({{0, IntSet::finite({1, 2})}, {5, IntSet::finite({0})}});
    CHECK(prod_measure(cnt, cnt, A) == fin(3));
    CHECK(symmetric_formula_check(cnt, cnt, A).all_pass());
    CHECK(A.transpose().slice_x(1) == IntSet::finite({0}));
    CHECK_THROWS_AS(IntPairSlabs({{0, IntSet::all()}}).transpose(), std::domain_error);
}
