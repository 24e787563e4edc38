#include "exm/extended.hpp"
#include "exm/rational.hpp"
#include "exm/vecq.hpp"

#include <doctest.h>

using namespace exm;

namespace {
ExtNonneg fin(long long n, long long d = 1) { return ExtNonneg::finite(Rational(n, d)); }
}

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational::parse("1025/513") == Rational(1025, 513));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(3) / Rational(6) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-7, 2).floor() == BigInt(-4));
    CHECK(Rational(7, 2).floor() == BigInt(3));
    CHECK(Rational(1, 2).pow(10) == Rational(1, 1024));
    CHECK(Rational(-1, 3) < Rational(1, 4));
}

TEST_CASE("rational decimal rendering") {
    CHECK(Rational(3, 2).to_decimal_string(12) == "1.5");
    CHECK(Rational(1, 3).to_decimal_string(5) == "0.33333");
    CHECK(Rational(1025, 513).to_decimal_string(6) == "1.99805");
    CHECK(Rational(0).to_decimal_string() == "0");
    CHECK(Rational(-12345).to_decimal_string(3) == "-1.23e4");
}

TEST_CASE("extended addition") {
    CHECK(fin(1, 2) + fin(1, 3) == fin(5, 6));
    CHECK(ExtNonneg::infinity() + fin(7) == ExtNonneg::infinity());
    CHECK(fin(0) + fin(0) == fin(0));
}

TEST_CASE("extended multiplication uses the 0*inf = 0 convention") {
    CHECK(fin(0) * ExtNonneg::infinity() == fin(0));
    CHECK(ExtNonneg::infinity() * fin(0) == fin(0));
    CHECK(fin(2, 3) * fin(9, 4) == fin(3, 2));
    CHECK(ExtNonneg::infinity() * fin(5) == ExtNonneg::infinity());
}

TEST_CASE("extended division only by positive finite values") {
    CHECK(fin(3) / fin(6) == fin(1, 2));
    CHECK(ExtNonneg::infinity() / fin(2) == ExtNonneg::infinity());
    CHECK_THROWS_AS(fin(1) / fin(0), std::domain_error);
    CHECK_THROWS_AS(fin(1) / ExtNonneg::infinity(), std::domain_error);
}

TEST_CASE("extended order is total with infinity on top") {
    CHECK(fin(1000000) < ExtNonneg::infinity());
    CHECK(!(ExtNonneg::infinity() < ExtNonneg::infinity()));
    CHECK(fin(1, 3) < fin(1, 2));
    CHECK(ExtNonneg::parse("inf") == ExtNonneg::infinity());
    CHECK(ExtNonneg::parse("5/6") == fin(5, 6));
    CHECK_THROWS_AS(ExtNonneg::finite(Rational(-1)), std::domain_error);
}

TEST_CASE("sup-norm on rational vectors") {
    VecQ v({Rational(1), Rational(-2)});
    CHECK(v.sup_norm() == Rational(2));
    CHECK(VecQ::zero(3).sup_norm() == Rational(0));
    VecQ w({Rational(0), Rational(3)});
    CHECK((v + w).sup_norm() == Rational(1));
    CHECK((Rational(-2) * v).sup_norm() == Rational(4));
    CHECK_THROWS_AS(v + VecQ::zero(3), std::invalid_argument);
}
