#pragma once

#include "exm/measure.hpp"
#include "exm/product.hpp"
#include "exm/rng.hpp"

#include <algorithm>
#include <vector>

namespace exm::gen {

/// Sorted distinct rationals, optionally strictly positive.
inline std::vector<Rational> sorted_endpoints(Rng& rng, int count, long long max_num,
                                              long long max_den, bool positive_only) {
    std::vector<Rational> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < count && guard++ < 20 * count + 100) {
        Rational r = positive_only ? rng.nonneg_rational(max_num, max_den) + Rational(1, max_den)
                                   : rng.rational(max_num, max_den);
        if (std::find(pts.begin(), pts.end(), r) == pts.end()) pts.push_back(r);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

inline IntervalSet interval_set(Rng& rng, Kind kind, int max_components, long long max_num,
                                long long max_den, bool positive_only = false) {
    int k = static_cast<int>(rng.uniform(1, max_components));
    auto pts = sorted_endpoints(rng, 2 * k, max_num, max_den, positive_only);
    std::vector<IntervalSet::Interval> ivs;
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) ivs.emplace_back(pts[i], pts[i + 1]);
    return IntervalSet(kind, std::move(ivs));
}

inline FiniteSet finite_set(Rng& rng, int carrier, bool nonempty = false) {
    std::uint32_t mask =
        static_cast<std::uint32_t>(rng.next() & ((carrier >= 31 ? ~0u : (1u << carrier) - 1u)));
    if (nonempty && mask == 0) mask = 1u << rng.uniform(0, carrier - 1);
    return FiniteSet(carrier, mask);
}

inline Element element(Rng& rng, const GroupSpec& G) {
    switch (G.type()) {
        case GroupType::finite: return Element(static_cast<int>(rng.uniform(0, G.table().n - 1)));
        case GroupType::int_add: return Element(Rational(rng.uniform(-8, 8)));
        case GroupType::pos_mul:
            return Element(rng.nonneg_rational(6, 4) + Rational(1, 4));
        default: return Element(rng.rational(8, 6));
    }
}

inline SetValue group_set(Rng& rng, const GroupSpec& G, Kind kind, int max_components = 3,
                          bool nonempty = false) {
    switch (G.type()) {
        case GroupType::finite: return finite_set(rng, G.table().n, nonempty);
        case GroupType::int_add: {
            std::vector<std::int64_t> elems;
            int k = static_cast<int>(rng.uniform(nonempty ? 1 : 0, 6));
            for (int i = 0; i < k; ++i) elems.push_back(rng.uniform(-10, 10));
            return IntSet::finite(std::move(elems));
        }
        default:
            return interval_set(rng, kind, max_components, 8, 6, G.type() == GroupType::pos_mul);
    }
}

/// Disjoint half_open pieces carved from one event grid.
inline std::vector<IntervalSet> disjoint_cells(Rng& rng, int cells, long long max_num,
                                               long long max_den) {
    auto pts = sorted_endpoints(rng, cells + 1, max_num, max_den, false);
    std::vector<IntervalSet> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        out.push_back(IntervalSet::single(Kind::half_open, pts[i], pts[i + 1]));
    return out;
}

inline SimpleFunc simple_func(Rng& rng, const GroupSpec& G, int max_pieces, long long max_value_num,
                              long long max_value_den) {
    std::vector<SimpleFunc::Piece> pieces;
    int k = static_cast<int>(rng.uniform(1, max_pieces));
    if (G.is_continuous()) {
        auto cells = disjoint_cells(rng, 2 * k, 8, 6);
        for (int i = 0; i < k && 2 * i < static_cast<int>(cells.size()); ++i)
            pieces.push_back({cells[2 * i],
                              ExtNonneg::finite(rng.nonneg_rational(max_value_num, max_value_den))});
    } else if (G.type() == GroupType::finite) {
        int n = G.table().n;
        for (int e = 0; e < n; ++e)
            if (rng.coin())
                pieces.push_back({FiniteSet::of(n, {e}),
                                  ExtNonneg::finite(rng.nonneg_rational(max_value_num, max_value_den))});
    } else {
        for (int i = 0; i < k; ++i)
            pieces.push_back({IntSet::finite({rng.uniform(-10, 10)}),
                              ExtNonneg::finite(rng.nonneg_rational(max_value_num, max_value_den))});
    }
    return SimpleFunc(std::move(pieces));
}

inline VecQ vec(Rng& rng, std::size_t dim, long long max_num, long long max_den) {
    std::vector<Rational> comps;
    for (std::size_t i = 0; i < dim; ++i) comps.push_back(rng.rational(max_num, max_den));
    return VecQ(std::move(comps));
}

inline StepFuncVec step_func(Rng& rng, const GroupSpec& G, std::size_t dim, int max_pieces) {
    std::vector<StepFuncVec::Piece> pieces;
    int k = static_cast<int>(rng.uniform(1, max_pieces));
    if (G.is_continuous()) {
        auto cells = disjoint_cells(rng, 2 * k, 8, 6);
        for (int i = 0; i < k && 2 * i < static_cast<int>(cells.size()); ++i)
            pieces.push_back({cells[2 * i], vec(rng, dim, 6, 4)});
    } else if (G.type() == GroupType::finite) {
        int n = G.table().n;
        for (int e = 0; e < n; ++e)
            if (rng.coin()) pieces.push_back({FiniteSet::of(n, {e}), vec(rng, dim, 6, 4)});
    } else {
        for (int i = 0; i < k; ++i)
            pieces.push_back({IntSet::finite({rng.uniform(-10, 10)}), vec(rng, dim, 6, 4)});
    }
    return StepFuncVec(dim, std::move(pieces));
}

inline RectUnion rect_union(Rng& rng, int max_rects, long long max_num, long long max_den) {
    std::vector<std::pair<IntervalSet, IntervalSet>> rects;
    int k = static_cast<int>(rng.uniform(1, max_rects));
    for (int i = 0; i < k; ++i)
        rects.emplace_back(interval_set(rng, Kind::half_open, 2, max_num, max_den),
                           interval_set(rng, Kind::half_open, 2, max_num, max_den));
    return RectUnion::from_rects(rects);
}

/// Disjoint-region 2-D simple function over rectangles carved from a grid.
inline SimpleFunc2D simple_func2d(Rng& rng, int max_pieces) {
    auto xcells = disjoint_cells(rng, max_pieces + 1, 8, 4);
    std::vector<SimpleFunc2D::Piece> pieces;
    for (std::size_t i = 0; i + 1 < xcells.size() && static_cast<int>(pieces.size()) < max_pieces;
         i += 1) {
        if (rng.coin()) continue;
        const auto& [lo, hi] = xcells[i].intervals().front();
        RectUnion r = RectUnion::rect(lo, hi, interval_set(rng, Kind::half_open, 2, 8, 4));
        if (r.is_empty()) continue;
        pieces.push_back({r, ExtNonneg::finite(rng.nonneg_rational(6, 4))});
    }
    return SimpleFunc2D(std::move(pieces));
}

inline StepFuncVec2D step_func2d(Rng& rng, std::size_t dim, int max_pieces) {
    auto xcells = disjoint_cells(rng, max_pieces + 1, 8, 4);
    std::vector<StepFuncVec2D::Piece> pieces;
    for (std::size_t i = 0; i + 1 < xcells.size() && static_cast<int>(pieces.size()) < max_pieces;
         i += 1) {
        if (rng.coin()) continue;
        const auto& [lo, hi] = xcells[i].intervals().front();
        RectUnion r = RectUnion::rect(lo, hi, interval_set(rng, Kind::half_open, 2, 8, 4));
        if (r.is_empty()) continue;
        pieces.push_back({r, vec(rng, dim, 6, 4)});
    }
    return StepFuncVec2D(dim, std::move(pieces));
}

inline FinitePairSet finite_pair_set(Rng& rng, int carrier) {
    FinitePairSet s(carrier);
    for (int x = 0; x < carrier; ++x)
        s.rows[x] = static_cast<std::uint32_t>(rng.next() &
                                               ((carrier >= 31 ? ~0u : (1u << carrier) - 1u)));
    return s;
}

}  // namespace exm::gen
