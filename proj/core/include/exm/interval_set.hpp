#pragma once

#include "exm/extended.hpp"
#include "exm/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exm {

enum class Kind { closed, open, half_open };

enum class GroupLaw { additive, multiplicative };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

/// Canonical finite union of disjoint rational-endpoint intervals, all of
/// one topological kind. half_open intervals denote [lo, hi). Canonical
/// form: sorted by lo, pairwise disjoint, non-mergeable under the kind's
/// closure rules (closed merges touching endpoints, half_open merges
/// adjacent, open merges only overlapping). Degenerate intervals lo == hi
/// are only allowed for kind == closed (a point).
class IntervalSet {
public:
    using Interval = std::pair<Rational, Rational>;

    explicit IntervalSet(Kind kind = Kind::half_open) : kind_(kind) {}
    IntervalSet(Kind kind, std::vector<Interval> intervals);

    static IntervalSet empty(Kind kind) { return IntervalSet(kind); }
    static IntervalSet single(Kind kind, Rational lo, Rational hi);

    Kind kind() const { return kind_; }
    const std::vector<Interval>& intervals() const { return ivs_; }
    bool is_empty() const { return ivs_.empty(); }
    std::size_t component_count() const { return ivs_.size(); }

    /// Same set of points, re-tagged: closure adds all boundary points,
    /// interior removes them. Both re-canonicalize.
    IntervalSet closure() const;
    IntervalSet interior() const;

    /// Same endpoints re-tagged with the given kind (measure-canonical,
    /// not pointwise-exact across kinds).
    IntervalSet rekind(Kind k) const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) = default;

    std::string to_string() const;

private:
    Kind kind_;
    std::vector<Interval> ivs_;
};

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

/// Set algebra, exact endpoint arithmetic. Same-kind union/intersection are
/// total; difference throws a representation error when the result cannot
/// be expressed in the operands' kind (e.g. [0,3] \ [1,2] in closed kind).
IntervalSet iset_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet iset_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet iset_diff(const IntervalSet& a, const IntervalSet& b);

/// Mixed-kind intersection: the true point set, re-canonicalized as a
/// half_open union. Boundary points carry no measure for the evaluators in
/// scope, so this is measure-preserving; degenerate single points are
/// dropped.
IntervalSet iset_intersect_mixed(const IntervalSet& a, const IntervalSet& b);

/// Total length, independent of kind. Always finite.
ExtNonneg iset_length(const IntervalSet& a);

/// Forward translate g + A (additive) or g * A (multiplicative, g > 0 and
/// positive endpoints required).
IntervalSet iset_translate(const IntervalSet& a, const Rational& g, GroupLaw law);

/// Pointwise -A or 1/A. Kind is preserved; for half_open sets the result
/// is the measure-canonical re-kinding of the reflected set (pointwise
/// negation of [a,b) is (-b,-a]). Exact for closed and open kinds.
IntervalSet iset_invert(const IntervalSet& a, GroupLaw law);

/// Open superset: every interval widened by eps on both sides, merged.
IntervalSet iset_fatten(const IntervalSet& a, const Rational& eps);
/// Closed subset: every interval narrowed by eps on both sides; intervals
/// of width <= 2*eps are dropped.
IntervalSet iset_shrink(const IntervalSet& a, const Rational& eps);

/// Minkowski sum A + B (additive) or A * B (multiplicative) with an open
/// B; the result is open. Used for the covering-separation sets K U^{-1}.
IntervalSet iset_sumset_open(const IntervalSet& a, const IntervalSet& b_open, GroupLaw law);

/// Pointwise-exact predicates; kinds may differ.
bool iset_member(const IntervalSet& a, const Rational& x);
bool iset_subset(const IntervalSet& a, const IntervalSet& b);
bool iset_disjoint(const IntervalSet& a, const IntervalSet& b);

/// Ordered point queries against the true point set (boundary-aware).
/// min/max of the set (nullopt when empty); the least point >= t; the
/// infimum of points > t (attained or not; for closed sets the infimum
/// lies in the set's closure); the greatest point <= t.
std::optional<Rational> iset_min(const IntervalSet& a);
std::optional<Rational> iset_max(const IntervalSet& a);
std::optional<Rational> iset_min_geq(const IntervalSet& a, const Rational& t);
std::optional<Rational> iset_inf_gt(const IntervalSet& a, const Rational& t);
std::optional<Rational> iset_max_leq(const IntervalSet& a, const Rational& t);

/// Text form: "[0,1]", "[0,3)", "(2/3,3/2)", unions joined with " u ",
/// empty set "{}". All components must share one kind.
IntervalSet parse_interval_text(const std::string& text);

}  // namespace exm
