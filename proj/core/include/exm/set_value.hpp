#pragma once

#include "exm/discrete_set.hpp"
#include "exm/interval_set.hpp"

#include <string>
#include <variant>

namespace exm {

/// A set in one of the supported carrier algebras. Operations require both
/// operands to come from the same carrier.
using SetValue = std::variant<IntervalSet, FiniteSet, IntSet>;

bool sv_is_empty(const SetValue& s);
SetValue sv_union(const SetValue& a, const SetValue& b);
SetValue sv_intersect(const SetValue& a, const SetValue& b);
SetValue sv_diff(const SetValue& a, const SetValue& b);
bool sv_subset(const SetValue& a, const SetValue& b);
bool sv_disjoint(const SetValue& a, const SetValue& b);
std::string sv_to_string(const SetValue& s);

}  // namespace exm
