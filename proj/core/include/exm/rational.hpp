#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace exm {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced with positive denominator.
/// Serializes as "p/q", or "p" when q == 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);

    static Rational parse(const std::string& text);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return v_.sign() < 0 ? -*this : *this; }

    /// Largest integer <= value.
    BigInt floor() const;

    /// Exact integer exponent power; e >= 0, or value nonzero for e < 0.
    Rational pow(long long e) const;

    double to_double() const;
    std::string to_string() const;
    /// Decimal rendering with the given number of significant digits
    /// (round half away from zero); for human scanning only.
    std::string to_decimal_string(int sig_digits = 12) const;

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace exm
