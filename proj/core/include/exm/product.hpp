#pragma once

#include "exm/measure.hpp"
#include "exm/rect_union.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace exm {

/// Product subset of Z x Z with finite x-support: sorted slabs
/// (x, y-set), y-sets nonempty (and possibly cofinite).
struct IntPairSlabs {
    std::vector<std::pair<std::int64_t, IntSet>> slabs;

    IntPairSlabs() = default;
    explicit IntPairSlabs(std::vector<std::pair<std::int64_t, IntSet>> raw);

    IntSet slice_x(std::int64_t x) const;
    bool is_empty() const { return slabs.empty(); }
    IntPairSlabs transpose() const;  // requires every y-set finite

    friend bool operator==(const IntPairSlabs& a, const IntPairSlabs& b) = default;
};

/// Measurable product set over one of the supported carrier pairs.
using ProductSet = std::variant<RectUnion, FinitePairSet, IntPairSlabs>;

bool pset_is_empty(const ProductSet& a);
bool pset_disjoint(const ProductSet& a, const ProductSet& b);
ProductSet pset_union(const ProductSet& a, const ProductSet& b);
ProductSet pset_transpose(const ProductSet& a);

/// Finitely-supported [0,inf]-valued function on a product carrier.
class SimpleFunc2D {
public:
    struct Piece {
        ProductSet region;
        ExtNonneg value;
    };

    SimpleFunc2D() = default;
    explicit SimpleFunc2D(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

private:
    std::vector<Piece> pieces_;
};

/// Step function into Q^d on a product carrier.
class StepFuncVec2D {
public:
    struct Piece {
        ProductSet region;
        VecQ value;
    };

    explicit StepFuncVec2D(std::size_t dim) : dim_(dim) {}
    StepFuncVec2D(std::size_t dim, std::vector<Piece> pieces);

    std::size_t dim() const { return dim_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

private:
    std::size_t dim_ = 1;
    std::vector<Piece> pieces_;
};

/// The step function x -> nu(A_x), exact via the slab decomposition.
/// Rejects non-sigma-finite nu.
SimpleFunc slice_measure_fn(const MeasureSpec& nu, const ProductSet& A);

/// (mu x nu)(A) = lintegral of the slice function. Both factors must be
/// sigma-finite.
ExtNonneg prod_measure(const MeasureSpec& mu, const MeasureSpec& nu, const ProductSet& A);

/// Both slice orientations computed exactly and compared.
CheckReport symmetric_formula_check(const MeasureSpec& mu, const MeasureSpec& nu,
                                    const ProductSet& A);

struct TonelliValues {
    ExtNonneg double_integral;
    ExtNonneg iterated_xy;
    ExtNonneg iterated_yx;
    // constructive measurability witnesses: the inner integrals as
    // canonical step functions of the outer variable
    SimpleFunc witness_x;  // x -> integral of f_x d nu
    SimpleFunc witness_y;  // y -> integral of f^y d mu
};

TonelliValues tonelli_values(const MeasureSpec& mu, const MeasureSpec& nu, const SimpleFunc2D& f);
CheckReport tonelli_check(const MeasureSpec& mu, const MeasureSpec& nu, const SimpleFunc2D& f);

struct FubiniPart1 {
    bool integrable_product = false;       // lintegral of ||f|| over mu x nu finite
    bool slices_ae_integrable = false;     // {x : f_x not nu-integrable} has mu-measure 0
    bool iterated_norm_integrable = false; // I_{||f||} is mu-integrable
};

FubiniPart1 fubini_part1(const MeasureSpec& mu, const MeasureSpec& nu, const StepFuncVec2D& f);
CheckReport fubini_integrability_check(const MeasureSpec& mu, const MeasureSpec& nu,
                                       const StepFuncVec2D& f);

struct FubiniValues {
    VecQ double_integral;
    VecQ iterated_xy;
    VecQ iterated_yx;
};

/// Requires f integrable (Part 1); throws a precondition error otherwise.
FubiniValues fubini_values(const MeasureSpec& mu, const MeasureSpec& nu, const StepFuncVec2D& f);
CheckReport fubini_check(const MeasureSpec& mu, const MeasureSpec& nu, const StepFuncVec2D& f);

}  // namespace exm
