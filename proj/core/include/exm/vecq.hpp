#pragma once

#include "exm/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace exm {

/// Fixed-dimension rational vector with the sup-norm. The sup-norm keeps
/// every norm value rational, so integrability conditions stay exact.
struct VecQ {
    std::vector<Rational> comps;

    VecQ() = default;
    explicit VecQ(std::vector<Rational> c) : comps(std::move(c)) {}
    static VecQ zero(std::size_t dim) { return VecQ(std::vector<Rational>(dim, Rational(0))); }

    std::size_t dim() const { return comps.size(); }
    bool is_zero() const {
        for (const auto& c : comps)
            if (!c.is_zero()) return false;
        return true;
    }

    Rational sup_norm() const {
        Rational m(0);
        for (const auto& c : comps) m = max(m, c.abs());
        return m;
    }

    VecQ& operator+=(const VecQ& o) {
        if (dim() != o.dim()) throw std::invalid_argument("VecQ: dimension mismatch");
        for (std::size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
        return *this;
    }
    friend VecQ operator+(VecQ a, const VecQ& b) { return a += b; }

    friend VecQ operator*(const Rational& s, VecQ v) {
        for (auto& c : v.comps) c *= s;
        return v;
    }

    friend bool operator==(const VecQ& a, const VecQ& b) = default;

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i) out += ", ";
            out += comps[i].to_string();
        }
        return out + ")";
    }
};

}  // namespace exm
