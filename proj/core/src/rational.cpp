#include "exm/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace exm {

namespace mp = boost::multiprecision;

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {  // cpp_rational requires a positive denominator
        num = -num;
        den = -den;
    }
    v_ = mp::cpp_rational(std::move(num), std::move(den));
}

Rational Rational::parse(const std::string& text) {
    auto bad = [&]() { return std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("malformed rational: zero denominator in '" + text + "'");
        return Rational(std::move(num), std::move(den));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

Rational Rational::operator-() const {
    return Rational(-v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

BigInt Rational::floor() const {
    BigInt q = num() / den();
    // integer division truncates toward zero; adjust negatives
    if (v_.sign() < 0 && q * den() != num()) q -= 1;
    return q;
}

Rational Rational::pow(long long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("rational: zero to negative power");
        return (Rational(1) / *this).pow(-e);
    }
    Rational acc(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

double Rational::to_double() const {
    return v_.convert_to<double>();
}

std::string Rational::to_string() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

std::string Rational::to_decimal_string(int sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    if (is_zero()) return "0";
    BigInt n = num() < 0 ? BigInt(-num()) : num();
    BigInt d = den();
    // decimal exponent of the leading digit
    int exp10 = 0;
    BigInt lo = n, hi = d;  // value = lo/hi scaled by 10^exp10
    while (lo < hi) { lo *= 10; --exp10; }
    while (lo >= hi * 10) { hi *= 10; ++exp10; }
    // now 1 <= (n/d)*10^-exp10 < 10; extract sig_digits digits with rounding
    BigInt scaled_num = n;
    BigInt scaled_den = d;
    int shift = sig_digits - 1 - exp10;
    if (shift >= 0)
        scaled_num *= Rational(10).pow(shift).num();
    else
        scaled_den *= Rational(10).pow(-shift).num();
    BigInt digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);  // round half up
    std::string ds = digits.str();
    if ((int)ds.size() > sig_digits) {  // rounding overflowed into an extra digit
        ds.pop_back();
        ++exp10;
    }
    std::string out;
    if (sign() < 0) out += "-";
    if (exp10 >= 0 && exp10 < sig_digits) {
        out += ds.substr(0, exp10 + 1);
        std::string frac = ds.substr(exp10 + 1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    } else if (exp10 < 0 && exp10 > -6) {
        out += "0.";
        out += std::string(-exp10 - 1, '0');
        while (ds.size() > 1 && ds.back() == '0') ds.pop_back();
        out += ds;
    } else {
        out += ds.substr(0, 1);
        std::string frac = ds.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(exp10);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace exm
