#include "exm/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace exm {

CayleyTable::CayleyTable(std::vector<std::vector<int>> t) : table(std::move(t)) {
    n = static_cast<int>(table.size());
    if (n < 1 || n > 24) throw std::invalid_argument("CayleyTable: order must be in 1..24");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("CayleyTable: table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("CayleyTable: entry out of range");
    }
    // Latin square
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row_seen(n, false), col_seen(n, false);
        for (int j = 0; j < n; ++j) {
            if (row_seen[table[i][j]] || col_seen[table[j][i]])
                throw std::invalid_argument("CayleyTable: not a Latin square");
            row_seen[table[i][j]] = col_seen[table[j][i]] = true;
        }
    }
    // associativity, exhaustive
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("CayleyTable: not associative");
    // identity
    identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (table[e][x] != x || table[x][e] != x) { ok = false; break; }
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw std::invalid_argument("CayleyTable: no identity element");
    // inverses
    inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == identity && table[b][a] == identity) { inverse[a] = b; break; }
        if (inverse[a] < 0) throw std::invalid_argument("CayleyTable: missing inverse");
    }
}

CayleyTable CayleyTable::cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return CayleyTable(std::move(t));
}

CayleyTable CayleyTable::klein4() {
    return CayleyTable({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

CayleyTable CayleyTable::symmetric3() {
    // permutations of {0,1,2}: e, r=(012), r2=(021), s=(01), sr=(02), sr2=(12)
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    auto compose = [&](int g, int h) {  // g after h
        int out[3];
        for (int i = 0; i < 3; ++i) out[i] = perms[g][perms[h][i]];
        for (int k = 0; k < 6; ++k)
            if (out[0] == perms[k][0] && out[1] == perms[k][1] && out[2] == perms[k][2]) return k;
        throw std::logic_error("symmetric3: composition not found");
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h) t[g][h] = compose(g, h);
    return CayleyTable(std::move(t));
}

std::string group_type_name(GroupType t) {
    switch (t) {
        case GroupType::finite: return "finite";
        case GroupType::int_add: return "int_add";
        case GroupType::real_add: return "real_add";
        case GroupType::pos_mul: return "pos_mul";
    }
    throw std::logic_error("unreachable group type");
}

std::string element_to_string(const Element& e) {
    if (std::holds_alternative<int>(e)) return "#" + std::to_string(std::get<int>(e));
    return std::get<Rational>(e).to_string();
}

GroupSpec GroupSpec::real_add() { GroupSpec g; g.type_ = GroupType::real_add; return g; }
GroupSpec GroupSpec::pos_mul() { GroupSpec g; g.type_ = GroupType::pos_mul; return g; }
GroupSpec GroupSpec::int_add() { GroupSpec g; g.type_ = GroupType::int_add; return g; }
GroupSpec GroupSpec::finite(CayleyTable t) {
    GroupSpec g;
    g.type_ = GroupType::finite;
    g.table_.push_back(std::move(t));
    return g;
}

GroupLaw GroupSpec::law() const {
    if (type_ == GroupType::pos_mul) return GroupLaw::multiplicative;
    return GroupLaw::additive;
}

const CayleyTable& GroupSpec::table() const {
    if (type_ != GroupType::finite) throw std::domain_error("GroupSpec: not a finite group");
    return table_.front();
}

Element GroupSpec::identity() const {
    switch (type_) {
        case GroupType::finite: return table().identity;
        case GroupType::pos_mul: return Rational(1);
        default: return Rational(0);
    }
}

Element GroupSpec::op(const Element& a, const Element& b) const {
    validate_element(a);
    validate_element(b);
    if (type_ == GroupType::finite) return table().op(std::get<int>(a), std::get<int>(b));
    const Rational& x = std::get<Rational>(a);
    const Rational& y = std::get<Rational>(b);
    return type_ == GroupType::pos_mul ? x * y : x + y;
}

Element GroupSpec::inv(const Element& a) const {
    validate_element(a);
    if (type_ == GroupType::finite) return table().inv(std::get<int>(a));
    const Rational& x = std::get<Rational>(a);
    return type_ == GroupType::pos_mul ? Rational(1) / x : -x;
}

void GroupSpec::validate_element(const Element& g) const {
    if (type_ == GroupType::finite) {
        if (!std::holds_alternative<int>(g))
            throw std::domain_error("group element: finite carrier expects an index");
        int i = std::get<int>(g);
        if (i < 0 || i >= table().n) throw std::domain_error("group element: index out of carrier");
        return;
    }
    if (!std::holds_alternative<Rational>(g))
        throw std::domain_error("group element: expected a rational for " + group_type_name(type_));
    const Rational& r = std::get<Rational>(g);
    if (type_ == GroupType::int_add && !r.is_integer())
        throw std::domain_error("group element: int_add expects an integer, got " + r.to_string());
    if (type_ == GroupType::pos_mul && r.sign() <= 0)
        throw std::domain_error("group element: pos_mul expects a positive rational, got " + r.to_string());
}

void GroupSpec::validate_set(const SetValue& s) const {
    switch (type_) {
        case GroupType::finite: {
            if (!std::holds_alternative<FiniteSet>(s))
                throw std::domain_error("set algebra: finite group expects FiniteSet");
            if (std::get<FiniteSet>(s).carrier_size != table().n)
                throw std::domain_error("set algebra: carrier size mismatch");
            return;
        }
        case GroupType::int_add:
            if (!std::holds_alternative<IntSet>(s))
                throw std::domain_error("set algebra: int_add expects IntSet");
            return;
        case GroupType::real_add:
            if (!std::holds_alternative<IntervalSet>(s))
                throw std::domain_error("set algebra: real_add expects IntervalSet");
            return;
        case GroupType::pos_mul: {
            if (!std::holds_alternative<IntervalSet>(s))
                throw std::domain_error("set algebra: pos_mul expects IntervalSet");
            const auto& is = std::get<IntervalSet>(s);
            if (!is.is_empty() && is.intervals().front().first.sign() <= 0)
                throw std::domain_error("set algebra: pos_mul sets need strictly positive endpoints");
            return;
        }
    }
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
    if (a.type_ != b.type_) return false;
    if (a.type_ == GroupType::finite) return a.table() == b.table();
    return true;
}

std::int64_t element_to_int64(const Element& e) {
    const Rational& r = std::get<Rational>(e);
    if (!r.is_integer()) throw std::domain_error("element: not an integer");
    if (r.num() > BigInt(INT64_MAX / 2) || r.num() < BigInt(INT64_MIN / 2))
        throw std::domain_error("element: integer out of supported window");
    return r.num().convert_to<std::int64_t>();
}

SetValue g_translate_set(const GroupSpec& G, const Element& g, const SetValue& s) {
    G.validate_element(g);
    G.validate_set(s);
    switch (G.type()) {
        case GroupType::finite: {
            const auto& fs = std::get<FiniteSet>(s);
            FiniteSet out = FiniteSet::empty(fs.carrier_size);
            for (int e : fs.elements()) out.mask |= 1u << G.table().op(std::get<int>(g), e);
            return out;
        }
        case GroupType::int_add:
            return zset_translate(std::get<IntSet>(s), element_to_int64(g));
        default:
            return iset_translate(std::get<IntervalSet>(s), std::get<Rational>(g), G.law());
    }
}

SetValue g_translate_set_right(const GroupSpec& G, const SetValue& s, const Element& g) {
    if (G.type() == GroupType::finite) {
        G.validate_element(g);
        G.validate_set(s);
        const auto& fs = std::get<FiniteSet>(s);
        FiniteSet out = FiniteSet::empty(fs.carrier_size);
        for (int e : fs.elements()) out.mask |= 1u << G.table().op(e, std::get<int>(g));
        return out;
    }
    // abelian carriers: right translate equals left translate
    return g_translate_set(G, g, s);
}

SetValue g_invert_set(const GroupSpec& G, const SetValue& s) {
    G.validate_set(s);
    switch (G.type()) {
        case GroupType::finite: {
            const auto& fs = std::get<FiniteSet>(s);
            FiniteSet out = FiniteSet::empty(fs.carrier_size);
            for (int e : fs.elements()) out.mask |= 1u << G.table().inv(e);
            return out;
        }
        case GroupType::int_add:
            return zset_negate(std::get<IntSet>(s));
        default:
            return iset_invert(std::get<IntervalSet>(s), G.law());
    }
}

SetValue shrink_basis(const GroupSpec& G, int n) {
    if (n < 0) throw std::domain_error("shrink_basis: n must be nonnegative");
    switch (G.type()) {
        case GroupType::finite:
            return FiniteSet(G.table().n, 1u << G.table().identity);
        case GroupType::int_add:
            return IntSet::finite({0});
        case GroupType::real_add: {
            Rational r = Rational(1, 2).pow(n);
            return IntervalSet::single(Kind::open, -r, r);
        }
        case GroupType::pos_mul: {
            Rational r = Rational(1) + Rational(1, 2).pow(n);
            return IntervalSet::single(Kind::open, Rational(1) / r, r);
        }
    }
    throw std::logic_error("unreachable group type");
}

bool is_compact_set(const GroupSpec& G, const SetValue& s) {
    G.validate_set(s);
    switch (G.type()) {
        case GroupType::finite: return true;
        case GroupType::int_add: return std::get<IntSet>(s).is_finite();
        default: return std::get<IntervalSet>(s).kind() == Kind::closed;
    }
}

bool is_open_set(const GroupSpec& G, const SetValue& s) {
    G.validate_set(s);
    if (G.is_discrete()) return true;
    return std::get<IntervalSet>(s).kind() == Kind::open;
}

bool set_contains_identity(const GroupSpec& G, const SetValue& s) {
    G.validate_set(s);
    switch (G.type()) {
        case GroupType::finite: return std::get<FiniteSet>(s).contains(G.table().identity);
        case GroupType::int_add: return std::get<IntSet>(s).contains(0);
        case GroupType::real_add: return iset_member(std::get<IntervalSet>(s), Rational(0));
        case GroupType::pos_mul: return iset_member(std::get<IntervalSet>(s), Rational(1));
    }
    throw std::logic_error("unreachable group type");
}

bool has_nonempty_interior(const GroupSpec& G, const SetValue& s) {
    G.validate_set(s);
    if (G.is_discrete()) return !sv_is_empty(s);
    return !std::get<IntervalSet>(s).interior().is_empty();
}

bool set_contains(const GroupSpec& G, const SetValue& s, const Element& e) {
    G.validate_set(s);
    G.validate_element(e);
    switch (G.type()) {
        case GroupType::finite: return std::get<FiniteSet>(s).contains(std::get<int>(e));
        case GroupType::int_add: return std::get<IntSet>(s).contains(element_to_int64(e));
        default: return iset_member(std::get<IntervalSet>(s), std::get<Rational>(e));
    }
}

PositiveCompact::PositiveCompact(GroupSpec g, SetValue s) : group(std::move(g)), set(std::move(s)) {
    group.validate_set(set);
    if (!is_compact_set(group, set))
        throw std::domain_error("PositiveCompact: set is not compact in the carrier");
    if (!has_nonempty_interior(group, set))
        throw std::domain_error("PositiveCompact: set has empty interior");
}

}  // namespace exm
