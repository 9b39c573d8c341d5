#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "randlab/rational.hpp"

namespace randlab {

/// Finite binary string over the characters '0' and '1'.
using Bits = std::string;

bool is_bits(std::string_view s);
/// Throws InputError unless `s` consists of '0'/'1' only.
void require_bits(std::string_view s);
bool is_prefix_of(std::string_view prefix, std::string_view s);
/// All 2^n strings of length n in lexicographic order.
std::vector<Bits> all_strings(std::size_t n);
/// All strings of length 0..n, ordered by length then lexicographically.
std::vector<Bits> all_strings_up_to(std::size_t n);
/// Binary expansion without leading zeros; 0 maps to "0".
Bits binary_of(unsigned long n);

/// The interval xΩ of all infinite sequences extending `prefix`.
struct Cylinder {
    Bits prefix;

    Rational measure() const { return Rational::pow2(-static_cast<long>(prefix.size())); }
    std::size_t depth() const { return prefix.size(); }
    bool contains(const Cylinder& other) const { return is_prefix_of(prefix, other.prefix); }

    friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
};

/// The eventually periodic sequence prefix · cycle · cycle · ...
class LazyPoint {
public:
    LazyPoint(Bits prefix, Bits cycle);

    /// First n bits of the sequence.
    Bits head(std::size_t n) const;
    char bit(std::size_t i) const;
    bool in(const Cylinder& c) const;
    const Bits& prefix() const { return prefix_; }
    const Bits& cycle() const { return cycle_; }
    std::string str() const { return (prefix_.empty() ? "-" : prefix_) + "(" + cycle_ + ")"; }

    /// Every point with prefix length <= max_prefix and cycle length in
    /// [1, max_cycle].
    static std::vector<LazyPoint> enumerate(std::size_t max_prefix, std::size_t max_cycle);

private:
    Bits prefix_;
    Bits cycle_;
};

/// Finite union of cylinders in canonical form: sorted, no member extends
/// another, and no sibling pair x0, x1 is present (they merge into x). The
/// canonical list is exactly the set of maximal cylinders inside the union,
/// so equal sets have equal representations.
class OpenSet {
public:
    OpenSet() = default;
    /// Canonicalizes an arbitrary list of prefixes.
    explicit OpenSet(std::vector<Bits> prefixes);

    static OpenSet whole() { return OpenSet({Bits{}}); }
    static OpenSet of(std::initializer_list<const char*> prefixes);

    const std::vector<Bits>& cylinders() const { return cyls_; }
    bool empty() const { return cyls_.empty(); }
    Rational measure() const;
    /// Largest member depth (0 for the empty set).
    std::size_t depth() const;

    bool contains(const LazyPoint& p) const;
    /// True iff the whole cylinder lies inside this set.
    bool contains(const Cylinder& c) const;
    bool contains(const OpenSet& other) const;

    friend bool operator==(const OpenSet&, const OpenSet&) = default;

private:
    std::vector<Bits> cyls_;
};

/// Canonical form of an arbitrary cylinder list.
std::vector<Bits> canonicalize(std::vector<Bits> prefixes);

enum class SetOp { Union, Intersect };

OpenSet set_union(const OpenSet& a, const OpenSet& b);
OpenSet set_intersect(const OpenSet& a, const OpenSet& b);
OpenSet set_complement(const OpenSet& a);
OpenSet openset_ops(SetOp op, const OpenSet& a, const OpenSet& b);

}  // namespace randlab
