#include "exm/group.hpp"

#include <doctest.h>

using namespace exm;

TEST_CASE("cayley table validation") {
    CHECK(CayleyTable::cyclic(5).identity == 0);
    CHECK(CayleyTable::symmetric3().n == 6);
    CHECK(CayleyTable::klein4().inv(2) == 2);  // every element self-inverse
    // not a Latin square
    CHECK_THROWS_AS(CayleyTable({{0, 0}, {0, 0}}), std::invalid_argument);
    // Latin square but not associative (no identity either): rows are
    // permutations yet (0*1)*1 != 0*(1*1) under this table
    CHECK_THROWS_AS(CayleyTable({{1, 0, 2}, {2, 1, 0}, {0, 2, 1}}), std::invalid_argument);
}

TEST_CASE("s3 is nonabelian with the expected inverses") {
    CayleyTable s3 = CayleyTable::symmetric3();
    // r = #1 is a 3-cycle, r^2 = #2, transposition s = #3
    CHECK(s3.op(1, 1) == 2);
    CHECK(s3.op(1, 2) == 0);
    CHECK(s3.inv(1) == 2);
    CHECK(s3.inv(3) == 3);
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) abelian = abelian && s3.op(a, b) == s3.op(b, a);
    CHECK(!abelian);
}

TEST_CASE("group element operations per carrier") {
    GroupSpec R = GroupSpec::real_add();
    CHECK(R.op(Rational(2), Rational(3)) == Element(Rational(5)));
    CHECK(R.inv(Rational(2)) == Element(Rational(-2)));

    GroupSpec P = GroupSpec::pos_mul();
    CHECK(P.op(Rational(2), Rational(3)) == Element(Rational(6)));
    CHECK(P.inv(Rational(2)) == Element(Rational(1, 2)));
    CHECK_THROWS_AS(P.validate_element(Element(Rational(-1))), std::domain_error);

    GroupSpec Z = GroupSpec::int_add();
    CHECK_THROWS_AS(Z.validate_element(Element(Rational(1, 2))), std::domain_error);

    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
    CHECK(S3.op(1, 1) == Element(2));
    CHECK_THROWS_AS(S3.validate_element(Element(9)), std::domain_error);
}

TEST_CASE("set translation on each carrier") {
    GroupSpec R = GroupSpec::real_add();
    CHECK(g_translate_set(R, Rational(2), IntervalSet::single(Kind::half_open, 0, 1)) ==
          SetValue(IntervalSet::single(Kind::half_open, 2, 3)));

    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
    CHECK(g_translate_set(S3, Element(1), FiniteSet::of(6, {0})) ==
          SetValue(FiniteSet::of(6, {1})));

    GroupSpec P = GroupSpec::pos_mul();
    CHECK(g_translate_set(P, Rational(3), IntervalSet::single(Kind::closed, 1, 2)) ==
          SetValue(IntervalSet::single(Kind::closed, 3, 6)));
    CHECK_THROWS_AS(g_translate_set(P, Rational(-1), IntervalSet::single(Kind::closed, 1, 2)),
                    std::domain_error);

    GroupSpec Z = GroupSpec::int_add();
    CHECK(g_translate_set(Z, Rational(5), IntSet::finite({0, 1})) ==
          SetValue(IntSet::finite({5, 6})));
}

TEST_CASE("set inversion on each carrier") {
    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
    CHECK(g_invert_set(S3, FiniteSet::of(6, {1})) == SetValue(FiniteSet::of(6, {2})));

    GroupSpec R = GroupSpec::real_add();
    CHECK(g_invert_set(R, IntervalSet::single(Kind::closed, 0, 1)) ==
          SetValue(IntervalSet::single(Kind::closed, -1, 0)));

    GroupSpec P = GroupSpec::pos_mul();
    CHECK(g_invert_set(P, IntervalSet::single(Kind::closed, 1, 4)) ==
          SetValue(IntervalSet::single(Kind::closed, Rational(1, 4), 1)));
}

TEST_CASE("shrink basis") {
    GroupSpec R = GroupSpec::real_add();
    CHECK(shrink_basis(R, 2) ==
          SetValue(IntervalSet::single(Kind::open, Rational(-1, 4), Rational(1, 4))));

    GroupSpec P = GroupSpec::pos_mul();
    CHECK(shrink_basis(P, 1) ==
          SetValue(IntervalSet::single(Kind::open, Rational(2, 3), Rational(3, 2))));

    GroupSpec S3 = GroupSpec::finite(CayleyTable::symmetric3());
    CHECK(shrink_basis(S3, 7) == SetValue(FiniteSet::of(6, {0})));

    GroupSpec Z = GroupSpec::int_add();
    CHECK(shrink_basis(Z, 3) == SetValue(IntSet::finite({0})));
}

TEST_CASE("positive compacts require compactness and interior") {
    GroupSpec R = GroupSpec::real_add();
    CHECK_NOTHROW(PositiveCompact(R, IntervalSet::single(Kind::closed, 0, 1)));
    // a point is compact but has empty interior
    CHECK_THROWS_AS(PositiveCompact(R, IntervalSet::single(Kind::closed, 1, 1)),
                    std::domain_error);
    // an open interval is not compact
    CHECK_THROWS_AS(PositiveCompact(R, IntervalSet::single(Kind::open, 0, 1)), std::domain_error);
    // int_add compacts are finite sets
    GroupSpec Z = GroupSpec::int_add();
    CHECK_NOTHROW(PositiveCompact(Z, IntSet::finite({0})));
    CHECK_THROWS_AS(PositiveCompact(Z, IntSet::all()), std::domain_error);
}
