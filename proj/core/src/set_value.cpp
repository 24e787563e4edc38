#include "exm/set_value.hpp"

#include <stdexcept>

namespace exm {

namespace {
[[noreturn]] void carrier_mismatch() {
    throw std::domain_error("set algebra: operands from different carriers");
}
}  // namespace

bool sv_is_empty(const SetValue& s) {
    return std::visit([](const auto& v) { return v.is_empty(); }, s);
}

#define EXM_SV_BINOP(name, iop, fop, zop)                                        \
    SetValue name(const SetValue& a, const SetValue& b) {                        \
        if (a.index() != b.index()) carrier_mismatch();                          \
        if (std::holds_alternative<IntervalSet>(a))                              \
            return iop(std::get<IntervalSet>(a), std::get<IntervalSet>(b));      \
        if (std::holds_alternative<FiniteSet>(a))                                \
            return fop(std::get<FiniteSet>(a), std::get<FiniteSet>(b));          \
        return zop(std::get<IntSet>(a), std::get<IntSet>(b));                    \
    }

EXM_SV_BINOP(sv_union, iset_union, fset_union, zset_union)
EXM_SV_BINOP(sv_intersect, iset_intersect, fset_intersect, zset_intersect)
EXM_SV_BINOP(sv_diff, iset_diff, fset_diff, zset_diff)

#undef EXM_SV_BINOP

bool sv_subset(const SetValue& a, const SetValue& b) {
    if (a.index() != b.index()) carrier_mismatch();
    if (std::holds_alternative<IntervalSet>(a))
        return iset_subset(std::get<IntervalSet>(a), std::get<IntervalSet>(b));
    if (std::holds_alternative<FiniteSet>(a))
        return fset_subset(std::get<FiniteSet>(a), std::get<FiniteSet>(b));
    return zset_subset(std::get<IntSet>(a), std::get<IntSet>(b));
}

bool sv_disjoint(const SetValue& a, const SetValue& b) {
    if (a.index() != b.index()) carrier_mismatch();
    if (std::holds_alternative<IntervalSet>(a))
        return iset_disjoint(std::get<IntervalSet>(a), std::get<IntervalSet>(b));
    if (std::holds_alternative<FiniteSet>(a))
        return fset_disjoint(std::get<FiniteSet>(a), std::get<FiniteSet>(b));
    return zset_disjoint(std::get<IntSet>(a), std::get<IntSet>(b));
}

std::string sv_to_string(const SetValue& s) {
    return std::visit([](const auto& v) { return v.to_string(); }, s);
}

}  // namespace exm
