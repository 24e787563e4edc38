#include "exm/discrete_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace exm {

FiniteSet::FiniteSet(int carrier, std::uint32_t m) : carrier_size(carrier), mask(m) {
    if (carrier < 1 || carrier > 31) throw std::invalid_argument("FiniteSet: carrier size out of range");
    if (carrier < 31 && (m >> carrier) != 0)
        throw std::invalid_argument("FiniteSet: members outside carrier");
}

FiniteSet FiniteSet::full(int carrier) {
    return FiniteSet(carrier, carrier >= 31 ? ~0u : ((1u << carrier) - 1u));
}

FiniteSet FiniteSet::of(int carrier, std::initializer_list<int> elems) {
    std::uint32_t m = 0;
    for (int e : elems) {
        if (e < 0 || e >= carrier) throw std::invalid_argument("FiniteSet: element outside carrier");
        m |= 1u << e;
    }
    return FiniteSet(carrier, m);
}

int FiniteSet::size() const { return std::popcount(mask); }

std::vector<int> FiniteSet::elements() const {
    std::vector<int> out;
    for (int e = 0; e < carrier_size; ++e)
        if (contains(e)) out.push_back(e);
    return out;
}

std::string FiniteSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

namespace {
void require_same_carrier(const FiniteSet& a, const FiniteSet& b) {
    if (a.carrier_size != b.carrier_size)
        throw std::invalid_argument("FiniteSet: carrier size mismatch");
}
}  // namespace

FiniteSet fset_union(const FiniteSet& a, const FiniteSet& b) {
    require_same_carrier(a, b);
    return FiniteSet(a.carrier_size, a.mask | b.mask);
}
FiniteSet fset_intersect(const FiniteSet& a, const FiniteSet& b) {
    require_same_carrier(a, b);
    return FiniteSet(a.carrier_size, a.mask & b.mask);
}
FiniteSet fset_diff(const FiniteSet& a, const FiniteSet& b) {
    require_same_carrier(a, b);
    return FiniteSet(a.carrier_size, a.mask & ~b.mask);
}
bool fset_subset(const FiniteSet& a, const FiniteSet& b) {
    require_same_carrier(a, b);
    return (a.mask & ~b.mask) == 0;
}
bool fset_disjoint(const FiniteSet& a, const FiniteSet& b) {
    require_same_carrier(a, b);
    return (a.mask & b.mask) == 0;
}

IntSet IntSet::finite(std::vector<std::int64_t> e) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    IntSet s;
    s.elems = std::move(e);
    return s;
}

IntSet IntSet::all_but(std::vector<std::int64_t> e) {
    IntSet s = finite(std::move(e));
    s.cofinite = true;
    return s;
}

bool IntSet::contains(std::int64_t x) const {
    bool listed = std::binary_search(elems.begin(), elems.end(), x);
    return cofinite ? !listed : listed;
}

std::size_t IntSet::size() const {
    if (cofinite) throw std::domain_error("IntSet: cofinite set has no finite size");
    return elems.size();
}

std::string IntSet::to_string() const {
    std::string out = cofinite ? "Z\\{" : "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(elems[i]);
    }
    return out + "}";
}

namespace {
std::vector<std::int64_t> merge_sorted(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
std::vector<std::int64_t> intersect_sorted(const std::vector<std::int64_t>& a,
                                           const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
std::vector<std::int64_t> diff_sorted(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
}  // namespace

IntSet zset_union(const IntSet& a, const IntSet& b) {
    IntSet s;
    if (!a.cofinite && !b.cofinite) {
        s.elems = merge_sorted(a.elems, b.elems);
    } else if (a.cofinite && b.cofinite) {
        s.cofinite = true;
        s.elems = intersect_sorted(a.elems, b.elems);
    } else {
        const IntSet& co = a.cofinite ? a : b;
        const IntSet& fin = a.cofinite ? b : a;
        s.cofinite = true;
        s.elems = diff_sorted(co.elems, fin.elems);
    }
    return s;
}

IntSet zset_intersect(const IntSet& a, const IntSet& b) {
    IntSet s;
    if (!a.cofinite && !b.cofinite) {
        s.elems = intersect_sorted(a.elems, b.elems);
    } else if (a.cofinite && b.cofinite) {
        s.cofinite = true;
        s.elems = merge_sorted(a.elems, b.elems);
    } else {
        const IntSet& co = a.cofinite ? a : b;
        const IntSet& fin = a.cofinite ? b : a;
        s.elems = diff_sorted(fin.elems, co.elems);
    }
    return s;
}

IntSet zset_diff(const IntSet& a, const IntSet& b) {
    IntSet bc;  // complement of b
    bc.cofinite = !b.cofinite;
    bc.elems = b.elems;
    return zset_intersect(a, bc);
}

IntSet zset_translate(const IntSet& a, std::int64_t g) {
    IntSet s = a;
    for (auto& e : s.elems) e += g;
    return s;
}

IntSet zset_negate(const IntSet& a) {
    IntSet s = a;
    for (auto& e : s.elems) e = -e;
    std::sort(s.elems.begin(), s.elems.end());
    return s;
}

bool zset_subset(const IntSet& a, const IntSet& b) {
    return zset_diff(a, b).is_empty();
}

bool zset_disjoint(const IntSet& a, const IntSet& b) {
    IntSet i = zset_intersect(a, b);
    return i.is_empty();
}

int FinitePairSet::size() const {
    int total = 0;
    for (auto r : rows) total += std::popcount(r);
    return total;
}

bool FinitePairSet::is_empty() const {
    for (auto r : rows)
        if (r) return false;
    return true;
}

FiniteSet FinitePairSet::slice_x(int x) const {
    if (x < 0 || x >= carrier_size) return FiniteSet::empty(carrier_size);
    return FiniteSet(carrier_size, rows[x]);
}

FiniteSet FinitePairSet::slice_y(int y) const {
    std::uint32_t m = 0;
    for (int x = 0; x < carrier_size; ++x)
        if ((rows[x] >> y) & 1u) m |= 1u << x;
    return FiniteSet(carrier_size, m);
}

FinitePairSet FinitePairSet::transpose() const {
    FinitePairSet t(carrier_size);
    for (int x = 0; x < carrier_size; ++x)
        for (int y = 0; y < carrier_size; ++y)
            if (contains(x, y)) t.insert(y, x);
    return t;
}

FinitePairSet FinitePairSet::from_bits(int carrier, std::uint64_t bits) {
    FinitePairSet s(carrier);
    for (int x = 0; x < carrier; ++x)
        for (int y = 0; y < carrier; ++y)
            if ((bits >> (x * carrier + y)) & 1u) s.insert(x, y);
    return s;
}

bool fpset_disjoint(const FinitePairSet& a, const FinitePairSet& b) {
    if (a.carrier_size != b.carrier_size)
        throw std::invalid_argument("FinitePairSet: carrier size mismatch");
    for (int x = 0; x < a.carrier_size; ++x)
        if (a.rows[x] & b.rows[x]) return false;
    return true;
}

}  // namespace exm
