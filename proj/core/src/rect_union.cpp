#include "exm/rect_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace exm {

RectUnion RectUnion::from_slabs(const std::vector<Slab>& slabs) {
    // Sweep the x-axis: every slab boundary is an event; on each atomic
    // x-cell the y-set is the union over slabs covering the cell.
    std::vector<Rational> events;
    for (const auto& s : slabs) {
        if (s.x_lo > s.x_hi) throw std::invalid_argument("RectUnion: slab with x_lo > x_hi");
        if (s.y.kind() != Kind::half_open)
            throw std::invalid_argument("RectUnion: y-sets must be half_open");
        if (s.x_lo == s.x_hi || s.y.is_empty()) continue;
        events.push_back(s.x_lo);
        events.push_back(s.x_hi);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    RectUnion out;
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        const Rational& lo = events[i];
        const Rational& hi = events[i + 1];
        IntervalSet y = IntervalSet::empty(Kind::half_open);
        for (const auto& s : slabs) {
            if (s.x_lo <= lo && hi <= s.x_hi && !s.y.is_empty()) y = iset_union(y, s.y);
        }
        if (y.is_empty()) continue;
        if (!out.slabs_.empty() && out.slabs_.back().x_hi == lo && out.slabs_.back().y == y)
            out.slabs_.back().x_hi = hi;
        else
            out.slabs_.push_back({lo, hi, std::move(y)});
    }
    return out;
}

RectUnion RectUnion::from_rects(const std::vector<std::pair<IntervalSet, IntervalSet>>& rects) {
    std::vector<Slab> slabs;
    for (const auto& [xs, ys] : rects) {
        if (xs.kind() != Kind::half_open || ys.kind() != Kind::half_open)
            throw std::invalid_argument("RectUnion: rectangle factors must be half_open");
        for (const auto& [lo, hi] : xs.intervals()) slabs.push_back({lo, hi, ys});
    }
    return from_slabs(slabs);
}

RectUnion RectUnion::rect(const Rational& x_lo, const Rational& x_hi, const IntervalSet& y) {
    return from_slabs({Slab{x_lo, x_hi, y}});
}

IntervalSet RectUnion::slice_x(const Rational& x) const {
    for (const auto& s : slabs_)
        if (s.x_lo <= x && x < s.x_hi) return s.y;
    return IntervalSet::empty(Kind::half_open);
}

IntervalSet RectUnion::slice_y(const Rational& y) const {
    std::vector<IntervalSet::Interval> xs;
    for (const auto& s : slabs_)
        if (iset_member(s.y, y)) xs.emplace_back(s.x_lo, s.x_hi);
    return IntervalSet(Kind::half_open, std::move(xs));
}

RectUnion RectUnion::transpose() const {
    std::vector<Slab> slabs;
    for (const auto& s : slabs_) {
        IntervalSet x_as_y = IntervalSet::single(Kind::half_open, s.x_lo, s.x_hi);
        for (const auto& [ylo, yhi] : s.y.intervals()) slabs.push_back({ylo, yhi, x_as_y});
    }
    return from_slabs(slabs);
}

bool RectUnion::member(const Rational& x, const Rational& y) const {
    return iset_member(slice_x(x), y);
}

std::string RectUnion::to_string() const {
    if (slabs_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < slabs_.size(); ++i) {
        if (i) out += " u ";
        out += "[" + slabs_[i].x_lo.to_string() + "," + slabs_[i].x_hi.to_string() + ")x" +
               slabs_[i].y.to_string();
    }
    return out;
}

RectUnion rect_union(const RectUnion& a, const RectUnion& b) {
    std::vector<RectUnion::Slab> slabs = a.slabs();
    slabs.insert(slabs.end(), b.slabs().begin(), b.slabs().end());
    return RectUnion::from_slabs(slabs);
}

bool rect_disjoint(const RectUnion& a, const RectUnion& b) {
    for (const auto& sa : a.slabs())
        for (const auto& sb : b.slabs()) {
            if (sa.x_hi <= sb.x_lo || sb.x_hi <= sa.x_lo) continue;
            if (!iset_disjoint(sa.y, sb.y)) return false;
        }
    return true;
}

}  // namespace exm
