#pragma once

#include "exm/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace exm {

/// Element of [0, infinity]: a nonnegative rational or the absorbing
/// infinity. Multiplication follows the measure-theory convention
/// 0 * inf = 0. Serializes finite values as rational strings, infinity
/// as "inf".
class ExtNonneg {
public:
    ExtNonneg() : fin_(Rational(0)) {}

    static ExtNonneg finite(Rational q);
    static ExtNonneg infinity() { ExtNonneg e; e.fin_.reset(); return e; }

    static ExtNonneg parse(const std::string& text);

    bool is_finite() const { return fin_.has_value(); }
    bool is_infinite() const { return !fin_.has_value(); }
    bool is_zero() const { return fin_.has_value() && fin_->is_zero(); }

    /// Finite payload; throws on infinity.
    const Rational& value() const;

    friend ExtNonneg operator+(const ExtNonneg& a, const ExtNonneg& b);
    friend ExtNonneg operator*(const ExtNonneg& a, const ExtNonneg& b);
    /// Division by a strictly positive finite value only; anything else
    /// signals a violated precondition.
    friend ExtNonneg operator/(const ExtNonneg& a, const ExtNonneg& b);

    friend bool operator==(const ExtNonneg& a, const ExtNonneg& b) = default;
    friend bool operator<(const ExtNonneg& a, const ExtNonneg& b);
    friend bool operator<=(const ExtNonneg& a, const ExtNonneg& b) { return a == b || a < b; }
    friend bool operator>(const ExtNonneg& a, const ExtNonneg& b) { return b < a; }
    friend bool operator>=(const ExtNonneg& a, const ExtNonneg& b) { return b <= a; }

    std::string to_string() const;

private:
    std::optional<Rational> fin_;  // empty = infinity
};

std::ostream& operator<<(std::ostream& os, const ExtNonneg& e);

/// |a - b| for finite operands, infinity if exactly one is infinite, 0 if both.
ExtNonneg ext_abs_diff(const ExtNonneg& a, const ExtNonneg& b);

}  // namespace exm
