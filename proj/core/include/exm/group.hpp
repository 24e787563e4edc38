#pragma once

#include "exm/rational.hpp"
#include "exm/set_value.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace exm {

/// Multiplication table of a finite group. Construction validates the
/// group axioms exhaustively: Latin square, associativity, identity and
/// inverses. Orders up to 24 are supported.
struct CayleyTable {
    int n = 0;
    std::vector<std::vector<int>> table;
    int identity = 0;
    std::vector<int> inverse;

    explicit CayleyTable(std::vector<std::vector<int>> t);

    int op(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }

    static CayleyTable cyclic(int n);
    static CayleyTable klein4();
    /// S3 as permutations of three points, composition g.h = "g after h".
    static CayleyTable symmetric3();

    friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
        return a.table == b.table;
    }
};

enum class GroupType { finite, int_add, real_add, pos_mul };

std::string group_type_name(GroupType t);

/// Group element: an index into a finite carrier, or a rational (integral
/// for int_add, strictly positive for pos_mul).
using Element = std::variant<Rational, int>;

std::string element_to_string(const Element& e);

/// One of the supported locally compact groups together with its set
/// algebra: finite groups and Z with discrete subsets, (R,+) and
/// ((0,oo),*) with rational interval sets.
class GroupSpec {
public:
    static GroupSpec real_add();
    static GroupSpec pos_mul();
    static GroupSpec int_add();
    static GroupSpec finite(CayleyTable t);

    GroupType type() const { return type_; }
    bool is_discrete() const { return type_ == GroupType::finite || type_ == GroupType::int_add; }
    bool is_continuous() const { return !is_discrete(); }
    /// Interval-endpoint law for the continuous carriers.
    GroupLaw law() const;
    const CayleyTable& table() const;

    Element identity() const;
    Element op(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;

    /// Checks that the element belongs to the carrier (index range, strict
    /// positivity, integrality) and the set to the group's algebra.
    void validate_element(const Element& g) const;
    void validate_set(const SetValue& s) const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b);

private:
    GroupSpec() = default;
    GroupType type_ = GroupType::real_add;
    std::vector<CayleyTable> table_;  // empty unless finite
};

/// Forward image g.S of a set under left translation. The preimage form
/// (h -> g h)^{-1} A equals the forward translate by g^{-1}; invariance
/// checks pass g^{-1} here so they read off that form literally.
SetValue g_translate_set(const GroupSpec& G, const Element& g, const SetValue& s);

/// Right translate S.g (forward image under h -> h g).
SetValue g_translate_set_right(const GroupSpec& G, const SetValue& s, const Element& g);

/// Pointwise inverse set S^{-1}.
SetValue g_invert_set(const GroupSpec& G, const SetValue& s);

/// Canonical shrinking open neighborhood basis of the identity:
/// V_{n+1} subset of V_n with intersection {identity}. Discrete carriers
/// use {e} for every n; real_add uses (-2^-n, 2^-n); pos_mul uses
/// (1/(1+2^-n), 1+2^-n).
SetValue shrink_basis(const GroupSpec& G, int n);

/// Whether the set is compact in the carrier's topology (closed interval
/// unions; finite discrete sets).
bool is_compact_set(const GroupSpec& G, const SetValue& s);
/// Whether the set is open (open interval unions; every discrete set).
bool is_open_set(const GroupSpec& G, const SetValue& s);
bool set_contains_identity(const GroupSpec& G, const SetValue& s);
bool has_nonempty_interior(const GroupSpec& G, const SetValue& s);
bool set_contains(const GroupSpec& G, const SetValue& s, const Element& e);

/// Compact set with nonempty interior; the covering reference K0.
struct PositiveCompact {
    GroupSpec group;
    SetValue set;

    PositiveCompact(GroupSpec g, SetValue s);
};

std::int64_t element_to_int64(const Element& e);

}  // namespace exm
