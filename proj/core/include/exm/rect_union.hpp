#pragma once

#include "exm/interval_set.hpp"

#include <string>
#include <utility>
#include <vector>

namespace exm {

/// Measurable product subset of the plane in slab form: disjoint sorted
/// x-slabs [x_lo, x_hi), each carrying a canonical half_open y-set.
/// Adjacent slabs with identical y-sets are merged, so the slab
/// decomposition is canonical and x -> y_set is piecewise constant.
class RectUnion {
public:
    struct Slab {
        Rational x_lo, x_hi;
        IntervalSet y;  // half_open, nonempty

        friend bool operator==(const Slab& a, const Slab& b) = default;
    };

    RectUnion() = default;

    /// Union of products x_set x y_set; the inputs may overlap.
    static RectUnion from_rects(const std::vector<std::pair<IntervalSet, IntervalSet>>& rects);
    /// Single rectangle [x_lo, x_hi) x y_set.
    static RectUnion rect(const Rational& x_lo, const Rational& x_hi, const IntervalSet& y);
    /// Canonicalize a raw slab list (overlap allowed between y-sets of
    /// x-overlapping slabs: they are unioned).
    static RectUnion from_slabs(const std::vector<Slab>& slabs);

    const std::vector<Slab>& slabs() const { return slabs_; }
    bool is_empty() const { return slabs_.empty(); }

    /// The y-slice {y : (x,y) in A}; empty when x lies in no slab.
    IntervalSet slice_x(const Rational& x) const;
    /// The x-slice {x : (x,y) in A} of the transposed set.
    IntervalSet slice_y(const Rational& y) const;

    RectUnion transpose() const;

    bool member(const Rational& x, const Rational& y) const;

    friend bool operator==(const RectUnion& a, const RectUnion& b) = default;

    std::string to_string() const;

private:
    std::vector<Slab> slabs_;
};

RectUnion rect_union(const RectUnion& a, const RectUnion& b);
bool rect_disjoint(const RectUnion& a, const RectUnion& b);

}  // namespace exm
