#pragma once

#include "exm/extended.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace exm {

/// Subset of a finite carrier {0..carrier_size-1}, stored as a bitmask.
/// In the discrete topology every subset is compact, open and measurable.
struct FiniteSet {
    int carrier_size = 0;
    std::uint32_t mask = 0;

    FiniteSet() = default;
    FiniteSet(int carrier, std::uint32_t m);
    static FiniteSet empty(int carrier) { return FiniteSet(carrier, 0); }
    static FiniteSet full(int carrier);
    static FiniteSet of(int carrier, std::initializer_list<int> elems);

    bool contains(int e) const { return e >= 0 && e < carrier_size && (mask >> e) & 1u; }
    int size() const;
    bool is_empty() const { return mask == 0; }
    std::vector<int> elements() const;

    friend bool operator==(const FiniteSet& a, const FiniteSet& b) = default;
    std::string to_string() const;
};

FiniteSet fset_union(const FiniteSet& a, const FiniteSet& b);
FiniteSet fset_intersect(const FiniteSet& a, const FiniteSet& b);
FiniteSet fset_diff(const FiniteSet& a, const FiniteSet& b);
bool fset_subset(const FiniteSet& a, const FiniteSet& b);
bool fset_disjoint(const FiniteSet& a, const FiniteSet& b);

/// Finite-or-cofinite subset of the integers: the minimal boolean algebra
/// closed under complement that can express an "unbounded counting set"
/// for the discrete group Z. Compact sets are the finite ones.
struct IntSet {
    bool cofinite = false;            // when true: Z minus elems
    std::vector<std::int64_t> elems;  // sorted, unique

    IntSet() = default;
    static IntSet finite(std::vector<std::int64_t> e);
    static IntSet all() { IntSet s; s.cofinite = true; return s; }
    static IntSet all_but(std::vector<std::int64_t> e);
    static IntSet empty() { return IntSet(); }

    bool contains(std::int64_t x) const;
    bool is_empty() const { return !cofinite && elems.empty(); }
    bool is_finite() const { return !cofinite; }
    /// Size of a finite set; throws for cofinite sets.
    std::size_t size() const;

    friend bool operator==(const IntSet& a, const IntSet& b) = default;
    std::string to_string() const;
};

IntSet zset_union(const IntSet& a, const IntSet& b);
IntSet zset_intersect(const IntSet& a, const IntSet& b);
IntSet zset_diff(const IntSet& a, const IntSet& b);
IntSet zset_translate(const IntSet& a, std::int64_t g);
IntSet zset_negate(const IntSet& a);
bool zset_subset(const IntSet& a, const IntSet& b);
bool zset_disjoint(const IntSet& a, const IntSet& b);

/// Subset of {0..n-1} x {0..n-1} for a finite carrier, stored as one
/// y-bitmask per x. rows[x] is the slice {y : (x,y) in A}.
struct FinitePairSet {
    int carrier_size = 0;
    std::vector<std::uint32_t> rows;

    FinitePairSet() = default;
    explicit FinitePairSet(int carrier) : carrier_size(carrier), rows(carrier, 0) {}

    bool contains(int x, int y) const {
        return x >= 0 && x < carrier_size && (rows[x] >> y) & 1u;
    }
    void insert(int x, int y) { rows[x] |= 1u << y; }
    int size() const;
    bool is_empty() const;

    FiniteSet slice_x(int x) const;   // {y : (x,y) in A}
    FiniteSet slice_y(int y) const;   // {x : (x,y) in A}
    FinitePairSet transpose() const;

    /// Decode a subset of the n*n grid from the low n*n bits (row-major),
    /// for exhaustive enumeration over small carriers.
    static FinitePairSet from_bits(int carrier, std::uint64_t bits);

    friend bool operator==(const FinitePairSet& a, const FinitePairSet& b) = default;
};

bool fpset_disjoint(const FinitePairSet& a, const FinitePairSet& b);

}  // namespace exm
