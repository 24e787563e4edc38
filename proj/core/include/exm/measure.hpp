#pragma once

#include "exm/group.hpp"
#include "exm/haar.hpp"
#include "exm/report.hpp"
#include "exm/vecq.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace exm {

enum class MeasureType { lebesgue_scaled, counting, dirac, haar_estimate };

/// Exact or estimate-backed measure evaluator, bound to its carrier group.
/// The sigma_finite flag is computed from the pair (evaluator, carrier):
/// counting on a continuous carrier is constructible for negative tests
/// but flagged non-sigma-finite, and the product layer refuses it.
class MeasureSpec {
public:
    static MeasureSpec lebesgue(GroupSpec G, Rational scale);
    static MeasureSpec counting(GroupSpec G);
    static MeasureSpec dirac(GroupSpec G, Element at);
    static MeasureSpec haar(HaarEvaluator evaluator);

    MeasureType type() const { return type_; }
    const GroupSpec& group() const { return group_; }
    bool sigma_finite() const { return sigma_finite_; }
    const Rational& scale() const { return scale_; }
    const Element& atom() const { return atom_; }
    const HaarEvaluator& haar_evaluator() const;

    /// Member of the exactly-evaluable translation-invariant family on its
    /// carrier (scaled Lebesgue on (R,+); counting on discrete carriers).
    bool invariant_exact_family() const;

    std::string to_string() const;

private:
    MeasureSpec() = default;
    MeasureType type_ = MeasureType::counting;
    GroupSpec group_ = GroupSpec::real_add();
    bool sigma_finite_ = true;
    Rational scale_ = Rational(1);
    Element atom_ = Rational(0);
    std::shared_ptr<const HaarEvaluator> haar_;
};

ExtNonneg measure_eval(const MeasureSpec& mu, const SetValue& A);
/// Exact measures return a degenerate bracket; the Haar estimate returns
/// its enclosure.
Bracket measure_eval_bracket(const MeasureSpec& mu, const SetValue& A);

/// Finitely-supported [0,inf]-valued piecewise-constant function: disjoint
/// measurable pieces (half_open interval sets or discrete sets), implicit
/// value 0 elsewhere. Canonical form merges pieces with equal values and
/// drops zero pieces, so values are distinct and nonzero.
class SimpleFunc {
public:
    struct Piece {
        SetValue set;
        ExtNonneg value;

        friend bool operator==(const Piece& a, const Piece& b) = default;
    };

    SimpleFunc() = default;
    explicit SimpleFunc(std::vector<Piece> pieces);
    static SimpleFunc indicator(SetValue s);
    static SimpleFunc scaled_indicator(ExtNonneg c, SetValue s);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

    friend bool operator==(const SimpleFunc& a, const SimpleFunc& b) = default;
    std::string to_string() const;

private:
    std::vector<Piece> pieces_;
};

/// Step function into Q^d with the sup-norm; Bochner-integrable pieces.
class StepFuncVec {
public:
    struct Piece {
        SetValue set;
        VecQ value;

        friend bool operator==(const Piece& a, const Piece& b) = default;
    };

    explicit StepFuncVec(std::size_t dim) : dim_(dim) {}
    StepFuncVec(std::size_t dim, std::vector<Piece> pieces);

    std::size_t dim() const { return dim_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

    friend bool operator==(const StepFuncVec& a, const StepFuncVec& b) = default;

private:
    std::size_t dim_ = 1;
    std::vector<Piece> pieces_;
};

/// Pointwise algebra via common refinement, all exact.
SimpleFunc simple_add(const SimpleFunc& f, const SimpleFunc& g);
SimpleFunc simple_scale(const ExtNonneg& c, const SimpleFunc& f);
SimpleFunc simple_pointwise_sup(const std::vector<SimpleFunc>& fs);
bool simple_le(const SimpleFunc& f, const SimpleFunc& g);
ExtNonneg simple_value_at(const GroupSpec& G, const SimpleFunc& f, const Element& x);
/// x -> f(x^{-1}): pieces are inverted setwise.
SimpleFunc simple_invert_arg(const GroupSpec& G, const SimpleFunc& f);
/// x -> ||f(x)|| as a SimpleFunc (sup-norm, rational).
SimpleFunc norm_func(const StepFuncVec& f);

/// Integral of a simple function: sum of measure(piece) * value under the
/// 0 * inf = 0 convention. Equals the supremum form because the function
/// is itself simple.
ExtNonneg lintegral(const MeasureSpec& mu, const SimpleFunc& f);
/// Conservative lower bound (uses bracket lower ends for estimate-backed
/// measures; exact otherwise).
ExtNonneg lintegral_lower(const MeasureSpec& mu, const SimpleFunc& f);

/// Vector integral over the pieces of finite measure; pieces of infinite
/// measure are skipped.
VecQ bintegral(const MeasureSpec& mu, const StepFuncVec& f);

/// True iff the integral of x -> ||f(x)|| is finite.
bool integrable_check(const MeasureSpec& mu, const StepFuncVec& f);

struct InvarianceCase {
    Element g;
    SetValue A;
};

/// Verifies mu((h -> g h)^{-1} A) = mu(A) per case, exactly (estimate
/// brackets must overlap for estimate-backed measures).
CheckReport left_invariance_check(const MeasureSpec& mu, const std::vector<InvarianceCase>& cases);

/// (i) compacts have finite measure; (ii) fattened brackets decrease
/// toward each measurable set's measure; (iii) shrunken brackets increase
/// toward each open set's measure. Final gaps are reported.
CheckReport regular_check(const MeasureSpec& mu, const std::vector<SetValue>& compacts,
                          const std::vector<SetValue>& opens,
                          const std::vector<SetValue>& measurables, const EpsSchedule& schedule);

/// For nonempty open U and f minorized on U by a positive constant c:
/// asserts mu(U) > 0 and lintegral(f) >= c * mu(U) > 0, with lower bracket
/// ends for estimate-backed measures.
CheckReport positivity_check(const MeasureSpec& mu, const SetValue& U, const SimpleFunc& f);

/// Inversion measure evaluation (mu-check): mu(A^{-1}). Dirac evaluates
/// pointwise so its atom is exempt from the half-open boundary
/// re-canonicalization.
ExtNonneg inv_measure_eval(const MeasureSpec& mu, const SetValue& A);

/// Chain f_0 <= f_1 <= ... <= f_N verified exactly on the common
/// refinement; reports per-step integrals and the terminal gap against
/// the integral of the supplied pointwise supremum (f_N when omitted).
CheckReport monotone_convergence_check(const MeasureSpec& mu, const std::vector<SimpleFunc>& chain,
                                       const std::optional<SimpleFunc>& limit,
                                       const std::optional<ExtNonneg>& gap_bound);

}  // namespace exm
