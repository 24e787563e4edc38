#include "exm/generators.hpp"
#include "exm/interval_set.hpp"
#include "exm/rng.hpp"

#include <doctest.h>

using namespace exm;

namespace {
IntervalSet ho(std::vector<IntervalSet::Interval> ivs) {
    return IntervalSet(Kind::half_open, std::move(ivs));
}
IntervalSet cl(std::vector<IntervalSet::Interval> ivs) {
    return IntervalSet(Kind::closed, std::move(ivs));
}
}

TEST_CASE("canonicalization merges per kind rules") {
    // adjacent closed intervals merge
    CHECK(cl({{0, 1}, {1, 2}}) == cl({{0, 2}}));
    // adjacent half-open intervals merge
    CHECK(ho({{0, 1}, {1, 2}}) == ho({{0, 2}}));
    // touching open intervals do not (the shared point is missing)
    IntervalSet open_pair(Kind::open, {{0, 1}, {1, 2}});
    CHECK(open_pair.component_count() == 2);
    // degenerate intervals survive only in closed kind
    CHECK(cl({{1, 1}}).component_count() == 1);
    CHECK(ho({{1, 1}}).is_empty());
    CHECK_THROWS_AS(ho({{2, 1}}), std::invalid_argument);
}

TEST_CASE("union, intersection, difference") {
    CHECK(iset_union(cl({{0, 1}}), cl({{1, 2}})) == cl({{0, 2}}));
    CHECK(iset_diff(ho({{0, 2}}), ho({{Rational(1, 2), 1}})) ==
          ho({{0, Rational(1, 2)}, {1, 2}}));
    CHECK(iset_intersect(IntervalSet(Kind::open, {{0, 1}}), IntervalSet(Kind::open, {{1, 2}}))
              .is_empty());
    // closed difference that leaves half-open ends is not representable
    CHECK_THROWS_AS(iset_diff(cl({{0, 3}}), cl({{1, 2}})), std::domain_error);
    // mixed kinds are rejected outside the dedicated operation
    CHECK_THROWS_AS(iset_union(cl({{0, 1}}), ho({{0, 1}})), std::domain_error);
    // mixed intersection canonicalizes half-open
    IntervalSet m = iset_intersect_mixed(cl({{0, 1}}), IntervalSet(Kind::open, {{0, 1}}));
    CHECK(m == ho({{0, 1}}));
}

TEST_CASE("length") {
    CHECK(iset_length(cl({{0, 1}})) == ExtNonneg::finite(1));
    CHECK(iset_length(IntervalSet::empty(Kind::half_open)) == ExtNonneg::finite(0));
    CHECK(iset_length(ho({{0, Rational(1, 2)}, {Rational(3, 4), 1}})) ==
          ExtNonneg::finite(Rational(3, 4)));
}

TEST_CASE("translation") {
    CHECK(iset_translate(ho({{0, 1}}), Rational(5), GroupLaw::additive) == ho({{5, 6}}));
    CHECK(iset_translate(cl({{1, 4}}), Rational(1, 2), GroupLaw::multiplicative) ==
          cl({{Rational(1, 2), 2}}));
    CHECK(iset_translate(IntervalSet::empty(Kind::half_open), Rational(3), GroupLaw::additive)
              .is_empty());
    CHECK_THROWS_AS(iset_translate(cl({{1, 2}}), Rational(0), GroupLaw::multiplicative),
                    std::domain_error);
    CHECK_THROWS_AS(iset_translate(cl({{-1, 2}}), Rational(2), GroupLaw::multiplicative),
                    std::domain_error);
}

TEST_CASE("inversion") {
    CHECK(iset_invert(cl({{0, 1}}), GroupLaw::additive) == cl({{-1, 0}}));
    CHECK(iset_invert(cl({{1, 2}}), GroupLaw::multiplicative) == cl({{Rational(1, 2), 1}}));
    // pointwise negation of [0,1) u [2,3) is (-3,-2] u (-1,0],
    // re-canonicalized half-open
    CHECK(iset_invert(ho({{0, 1}, {2, 3}}), GroupLaw::additive) == ho({{-3, -2}, {-1, 0}}));
}

TEST_CASE("fatten and shrink") {
    CHECK(iset_fatten(cl({{0, 1}}), Rational(1, 8)) ==
          IntervalSet(Kind::open, {{Rational(-1, 8), Rational(9, 8)}}));
    CHECK(iset_shrink(cl({{0, 1}}), Rational(1, 8)) == cl({{Rational(1, 8), Rational(7, 8)}}));
    CHECK(iset_shrink(cl({{0, Rational(1, 8)}}), Rational(1, 8)).is_empty());
    // fatten always yields an open superset, shrink a closed subset
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        IntervalSet s = gen::interval_set(rng, Kind::half_open, 3, 9, 8);
        Rational eps(1, rng.uniform(2, 12));
        CHECK(iset_subset(s, iset_fatten(s, eps)));
        CHECK(iset_subset(iset_shrink(s, eps), s));
    }
}

TEST_CASE("membership and subset are boundary-aware") {
    CHECK(iset_member(cl({{0, 1}}), Rational(1)));
    CHECK(!iset_member(ho({{0, 1}}), Rational(1)));
    CHECK(!iset_member(IntervalSet(Kind::open, {{0, 1}}), Rational(0)));
    CHECK(iset_subset(ho({{0, 1}}), cl({{0, 1}})));
    CHECK(!iset_subset(cl({{0, 1}}), ho({{0, 1}})));
    CHECK(iset_subset(cl({{0, 1}}), IntervalSet(Kind::open, {{-1, 2}})));
    CHECK(!iset_subset(cl({{0, 1}}), IntervalSet(Kind::open, {{0, 2}})));
    CHECK(iset_disjoint(ho({{0, 1}}), ho({{1, 2}})));
    CHECK(!iset_disjoint(cl({{0, 1}}), cl({{1, 2}})));
}

TEST_CASE("minkowski sum with an open set") {
    IntervalSet u(Kind::open, {{Rational(-1, 4), Rational(1, 4)}});
    CHECK(iset_sumset_open(cl({{0, 1}}), u, GroupLaw::additive) ==
          IntervalSet(Kind::open, {{Rational(-1, 4), Rational(5, 4)}}));
    IntervalSet v(Kind::open, {{Rational(2, 3), Rational(3, 2)}});
    CHECK(iset_sumset_open(cl({{1, 4}}), v, GroupLaw::multiplicative) ==
          IntervalSet(Kind::open, {{Rational(2, 3), 6}}));
}

TEST_CASE("closed-set point queries") {
    IntervalSet k = cl({{0, 1}, {2, 3}});
    CHECK(*iset_min(k) == Rational(0));
    CHECK(*iset_max(k) == Rational(3));
    CHECK(*iset_min_geq(k, Rational(1, 2)) == Rational(1, 2));
    CHECK(*iset_min_geq(k, Rational(3, 2)) == Rational(2));
    CHECK(!iset_min_geq(k, Rational(4)).has_value());
    CHECK(*iset_inf_gt(k, Rational(1)) == Rational(2));
    CHECK(*iset_inf_gt(k, Rational(5, 2)) == Rational(5, 2));
    CHECK(*iset_max_leq(k, Rational(5, 2)) == Rational(5, 2));
    CHECK(*iset_max_leq(k, Rational(3, 2)) == Rational(1));
}

TEST_CASE("interval text parsing") {
    CHECK(parse_interval_text("[0,1]") == cl({{0, 1}}));
    CHECK(parse_interval_text("[0,3)") == ho({{0, 3}}));
    CHECK(parse_interval_text("(2/3, 3/2)") ==
          IntervalSet(Kind::open, {{Rational(2, 3), Rational(3, 2)}}));
    CHECK(parse_interval_text("[0,1) u [2,3)") == ho({{0, 1}, {2, 3}}));
    CHECK_THROWS_AS(parse_interval_text("[1,0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_interval_text("0,1"), std::invalid_argument);
}

TEST_CASE("set operations against membership sampling") {
    Rng rng(2024);
    for (int i = 0; i < 120; ++i) {
        IntervalSet a = gen::interval_set(rng, Kind::half_open, 3, 6, 5);
        IntervalSet b = gen::interval_set(rng, Kind::half_open, 3, 6, 5);
        IntervalSet u = iset_union(a, b), n = iset_intersect(a, b), d = iset_diff(a, b);
        for (int p = 0; p < 10; ++p) {
            Rational x = rng.rational(8, 10);
            bool ia = iset_member(a, x), ib = iset_member(b, x);
            CHECK(iset_member(u, x) == (ia || ib));
            CHECK(iset_member(n, x) == (ia && ib));
            CHECK(iset_member(d, x) == (ia && !ib));
        }
    }
}
