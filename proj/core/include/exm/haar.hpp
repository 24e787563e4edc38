#pragma once

#include "exm/group.hpp"
#include "exm/report.hpp"

#include <functional>
#include <vector>

namespace exm {

/// Named epsilon schedule "dyadic:k": eps_j = 2^-j for j = 1..k_max.
struct EpsSchedule {
    int k_max = 10;

    static EpsSchedule dyadic(int k_max);
    Rational eps(int j) const;
    Rational last() const { return eps(k_max); }
    std::string name() const { return "dyadic:" + std::to_string(k_max); }
};

/// Minimal number of left translates of V covering K, with a witness list
/// of translate anchors. The witness cover is re-verified exactly by set
/// inclusion before returning.
struct IndexResult {
    long long count = 0;
    std::vector<Element> witness;
};

/// Covering index (K : V). K must be compact in the carrier; V must be
/// either an open neighborhood of the identity or a compact set with
/// nonempty interior (the (K : K0) form). On the continuous carriers V
/// must be a single interval.
///
/// Continuous carriers use greedy window covers anchored at the leftmost
/// uncovered point. For open V of width w the anchor windows are the
/// half-open [x, x+w): a half-open cover converts to an open cover of the
/// same count (shift each window left by a distinct small delta; the
/// exchange argument gives optimality of the greedy count among half-open
/// covers, and any open cover is dominated by the half-open relaxation).
/// Discrete carriers solve the exact minimum set cover.
IndexResult index(const GroupSpec& G, const SetValue& K, const SetValue& V);

/// (index K U) / (index K0 U), exact.
Rational prehaar(const GroupSpec& G, const PositiveCompact& K0, const SetValue& U, const SetValue& K);

struct PrehaarCase {
    SetValue K;
    SetValue K2;
    Element x;
};

/// Verifies, exactly per case: index submultiplicativity
/// (K:U) <= (K:K0)(K0:U); the bounds 0 <= h_U(K) <= (K:K0); h_U(K0) = 1;
/// translation invariance h_U(xK) = h_U(K); monotonicity K <= K u K2;
/// subadditivity; and exact additivity whenever the separation
/// K V^-1 disjoint K2 V^-1 holds.
CheckReport prehaar_properties_check(const GroupSpec& G, const PositiveCompact& K0,
                                     const SetValue& U, const std::vector<PrehaarCase>& cases);

/// The separation set K U^-1 used by the additivity side condition.
SetValue covering_separation_set(const GroupSpec& G, const SetValue& K, const SetValue& U);

/// Finite-resolution stand-in for the limit content: prehaar values along
/// the canonical shrinking basis V_n, with a Cauchy gap over the tail.
struct ChaarEstimate {
    int n_max = 0;
    std::vector<SetValue> k_list;
    std::vector<std::vector<Rational>> values;  // values[i][n-1] = h_{V_n}(k_list[i])
    Rational cauchy_gap;                        // max tail step over all sets
};

ChaarEstimate chaar_estimate(const GroupSpec& G, const PositiveCompact& K0,
                             const std::vector<SetValue>& k_list, int n_max);

/// Per-n exact bullets (nonnegativity, h(empty) = 0, h(K0) = 1,
/// translation invariance, monotonicity, subadditivity) plus additivity
/// for disjoint compacts: exact once the n-dependent separation holds,
/// and residual <= tolerance at n_max otherwise.
CheckReport chaar_properties_check(const GroupSpec& G, const PositiveCompact& K0,
                                   const std::vector<PrehaarCase>& cases, int n_max,
                                   const Rational& tolerance);

/// Content evaluator on compact sets. eval_coarser, when set, evaluates
/// the same content one resolution step coarser and feeds the Cauchy
/// padding of downstream brackets; exact contents leave it empty.
struct ContentFn {
    std::string label;
    std::function<ExtNonneg(const SetValue&)> eval;
    std::function<ExtNonneg(const SetValue&)> eval_coarser;
};

ContentFn content_from_length();
ContentFn content_from_counting();
ContentFn content_from_chaar(const GroupSpec& G, const PositiveCompact& K0, int n);

/// Increasing sequence h(shrink(U, eps_k)); the exact supremum when the
/// schedule stabilizes (discrete carriers stabilize immediately).
struct InnerContentResult {
    std::vector<ExtNonneg> sequence;
    ExtNonneg final_value;
    ExtNonneg last_step;
};

InnerContentResult inner_content(const GroupSpec& G, const ContentFn& h, const SetValue& U,
                                 const EpsSchedule& schedule);

/// Decreasing sequence inner_content(h, fatten(A, eps_k)) plus a bracket
/// enclosing the induced outer measure: lower = h(compact inside A),
/// upper = h(compact closure of an open superset), both padded by the
/// content's Cauchy step when the content is itself an estimate.
struct OuterMeasureResult {
    std::vector<ExtNonneg> sequence;
    Bracket bracket;
    ExtNonneg last_step;
};

OuterMeasureResult outer_measure_from_content(const GroupSpec& G, const ContentFn& h,
                                              const SetValue& A, const EpsSchedule& schedule);

/// Splitting diagnostic |m(P) - m(P n A) - m(P \ A)| <= tolerance + the
/// three bracket widths, with m the outer-measure bracket midpoint.
CheckReport caratheodory_check(const GroupSpec& G, const ContentFn& h, const SetValue& A,
                               const std::vector<SetValue>& probes, const EpsSchedule& schedule,
                               const Rational& tolerance);

/// Outer measure from the chaar content, normalized so the estimate at K0
/// is 1. The bracket carries the combined uncertainty (Cauchy gap plus
/// regularity bracket widths); it is exact on discrete carriers.
struct HaarEstimateResult {
    Bracket bracket;
    Rational cauchy_gap;
    std::vector<Rational> prehaar_by_n;  // h_{V_n}(closure A), n = 1..n_max
};

HaarEstimateResult haar_measure_estimate(const GroupSpec& G, const PositiveCompact& K0,
                                         const SetValue& A, int n_max, const EpsSchedule& schedule);

/// Immutable handle for measure evaluators backed by the Haar estimate.
struct HaarEvaluator {
    GroupSpec group;
    PositiveCompact K0;
    int n_max = 10;
    EpsSchedule schedule;

    Bracket eval_bracket(const SetValue& A) const;
};

}  // namespace exm
