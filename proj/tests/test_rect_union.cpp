#include "exm/rect_union.hpp"

#include <doctest.h>

using namespace exm;

namespace {
IntervalSet ho(Rational lo, Rational hi) {
    return IntervalSet::single(Kind::half_open, std::move(lo), std::move(hi));
}
}

TEST_CASE("slicing a rectangle") {
    RectUnion A = RectUnion::rect(0, 1, ho(0, 3));
    CHECK(A.slice_x(Rational(1, 2)) == ho(0, 3));
    CHECK(A.slice_x(Rational(2)).is_empty());   // outside all slabs
    CHECK(A.slice_x(Rational(1)).is_empty());   // right edge excluded
    CHECK(A.member(Rational(1, 2), Rational(0)));
    CHECK(!A.member(Rational(1, 2), Rational(3)));
}

TEST_CASE("L-shape slab decomposition") {
    // ([0,2) x [0,1)) u ([0,1) x [1,2))
    RectUnion L = RectUnion::from_rects({{ho(0, 2), ho(0, 1)}, {ho(0, 1), ho(1, 2)}});
    CHECK(L.slice_x(Rational(1, 2)) == ho(0, 2));
    CHECK(L.slice_x(Rational(3, 2)) == ho(0, 1));
    CHECK(L.slabs().size() == 2);  // canonical: two slabs with distinct y-sets

    RectUnion T = L.transpose();
    CHECK(T.slice_x(Rational(1, 2)) == ho(0, 2));
    CHECK(T.slice_x(Rational(3, 2)) == ho(0, 1));
    CHECK(T.transpose() == L);
}

TEST_CASE("canonical form merges slabs with equal y-sets") {
    RectUnion A = RectUnion::from_slabs({{0, 1, ho(0, 1)}, {1, 2, ho(0, 1)}});
    CHECK(A.slabs().size() == 1);
    CHECK(A.slabs().front().x_hi == Rational(2));
    // overlapping slabs union their y-sets
    RectUnion B = RectUnion::from_slabs({{0, 2, ho(0, 1)}, {1, 3, ho(2, 3)}});
    CHECK(B.slice_x(Rational(3, 2)) == IntervalSet(Kind::half_open, {{0, 1}, {2, 3}}));
}

TEST_CASE("disjointness and union") {
    RectUnion A = RectUnion::rect(0, 1, ho(0, 1));
    RectUnion B = RectUnion::rect(0, 1, ho(1, 2));
    RectUnion C = RectUnion::rect(Rational(1, 2), 2, ho(0, 1));
    CHECK(rect_disjoint(A, B));
    CHECK(!rect_disjoint(A, C));
    RectUnion U = rect_union(A, B);
    CHECK(U.slice_x(Rational(1, 2)) == ho(0, 2));
}

TEST_CASE("slab invariants are enforced") {
    CHECK_THROWS_AS(RectUnion::from_slabs({{1, 0, ho(0, 1)}}), std::invalid_argument);
    CHECK_THROWS_AS(RectUnion::rect(0, 1, IntervalSet::single(Kind::closed, 0, 1)),
                    std::invalid_argument);
    CHECK(RectUnion::from_slabs({{0, 0, ho(0, 1)}}).is_empty());
}
