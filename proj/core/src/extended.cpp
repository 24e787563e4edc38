#include "exm/extended.hpp"

#include <ostream>
#include <stdexcept>

namespace exm {

ExtNonneg ExtNonneg::finite(Rational q) {
    if (q.sign() < 0) throw std::domain_error("ExtNonneg: negative finite value " + q.to_string());
    ExtNonneg e;
    e.fin_ = std::move(q);
    return e;
}

ExtNonneg ExtNonneg::parse(const std::string& text) {
    if (text == "inf") return infinity();
    return finite(Rational::parse(text));
}

const Rational& ExtNonneg::value() const {
    if (!fin_) throw std::domain_error("ExtNonneg: infinite value has no rational payload");
    return *fin_;
}

ExtNonneg operator+(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.is_infinite() || b.is_infinite()) return ExtNonneg::infinity();
    return ExtNonneg::finite(*a.fin_ + *b.fin_);
}

ExtNonneg operator*(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.is_zero() || b.is_zero()) return ExtNonneg::finite(0);  // 0 * inf = 0
    if (a.is_infinite() || b.is_infinite()) return ExtNonneg::infinity();
    return ExtNonneg::finite(*a.fin_ * *b.fin_);
}

ExtNonneg operator/(const ExtNonneg& a, const ExtNonneg& b) {
    if (b.is_infinite()) throw std::domain_error("ExtNonneg: division by infinity");
    if (b.is_zero()) throw std::domain_error("ExtNonneg: division by zero");
    if (a.is_infinite()) return ExtNonneg::infinity();
    return ExtNonneg::finite(*a.fin_ / *b.fin_);
}

bool operator<(const ExtNonneg& a, const ExtNonneg& b) {
    if (b.is_infinite()) return a.is_finite();
    if (a.is_infinite()) return false;
    return *a.fin_ < *b.fin_;
}

std::string ExtNonneg::to_string() const {
    return fin_ ? fin_->to_string() : "inf";
}

std::ostream& operator<<(std::ostream& os, const ExtNonneg& e) {
    return os << e.to_string();
}

ExtNonneg ext_abs_diff(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.is_infinite() && b.is_infinite()) return ExtNonneg::finite(0);
    if (a.is_infinite() || b.is_infinite()) return ExtNonneg::infinity();
    return ExtNonneg::finite((a.value() - b.value()).abs());
}

}  // namespace exm
