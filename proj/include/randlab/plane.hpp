#pragma once

// Step functions and open sets on Ω × ℝ≥0.

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "randlab/basic_func.hpp"
#include "randlab/cantor.hpp"
#include "randlab/rational.hpp"

namespace randlab {

/// Half-open rational interval [lo, hi) with 0 <= lo < hi.
struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    bool contains(const Rational& r) const { return lo <= r && r < hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Merges overlapping or touching intervals; result sorted and disjoint.
std::vector<Interval> merge_intervals(std::vector<Interval> iv);

/// Non-negative piecewise-constant function of r >= 0 with finite support:
/// breakpoints 0 = r_0 < r_1 < ... < r_k, value v_j on [r_{j-1}, r_j), zero
/// beyond r_k. Canonical: adjacent pieces differ, the last piece is non-zero.
class StepFn {
public:
    StepFn() : breaks_{Rational()} {}
    /// `breaks` must start at 0 and increase strictly; one value per piece.
    StepFn(std::vector<Rational> breaks, std::vector<Rational> values);

    /// c on [lo, hi), zero elsewhere.
    static StepFn box(const Rational& lo, const Rational& hi, const Rational& c);

    const std::vector<Rational>& breaks() const { return breaks_; }
    const std::vector<Rational>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }
    /// End of the support (r_k), 0 for the zero function.
    const Rational& extent() const { return breaks_.back(); }

    Rational at(const Rational& r) const;
    Rational integral() const;
    /// Total length of {r : f(r) > t}; requires t >= 0.
    Rational exceed_length(const Rational& t) const;
    std::vector<Interval> exceed_intervals(const Rational& t) const;
    std::set<Rational> range() const;

    friend bool operator==(const StepFn&, const StepFn&) = default;

private:
    void normalize();
    std::vector<Rational> breaks_;
    std::vector<Rational> values_;

    friend StepFn combine(FuncOp op, const StepFn& a, const StepFn& b);
    friend StepFn scale(const StepFn& f, const Rational& c);
    friend StepFn excess_over(const StepFn& f, const Rational& t);
};

StepFn combine(FuncOp op, const StepFn& a, const StepFn& b);
StepFn scale(const StepFn& f, const Rational& c);
StepFn excess_over(const StepFn& f, const Rational& t);

/// Basic function on Ω × ℝ≥0: depends on the first `depth` bits of ω and is
/// a finite-support step function of r on each cylinder. Zero slices are not
/// stored.
class BasicFunc2D {
public:
    BasicFunc2D() = default;
    explicit BasicFunc2D(std::size_t depth) : depth_(depth) {}
    BasicFunc2D(std::size_t depth, std::map<Bits, StepFn> slices);

    std::size_t depth() const { return depth_; }
    const std::map<Bits, StepFn>& slices() const { return slices_; }
    bool is_zero() const { return slices_.empty(); }

    Rational at(std::string_view bits, const Rational& r) const;
    const StepFn* slice(std::string_view bits) const;
    BasicFunc2D refined(std::size_t depth) const;
    std::set<Rational> range() const;
    /// Every breakpoint used by any slice.
    std::set<Rational> breakpoints() const;

    friend bool operator==(const BasicFunc2D&, const BasicFunc2D&) = default;

private:
    std::size_t depth_ = 0;
    std::map<Bits, StepFn> slices_;
};

BasicFunc2D combine(FuncOp op, const BasicFunc2D& f, const BasicFunc2D& g);
BasicFunc2D scale(const BasicFunc2D& f, const Rational& c);
BasicFunc2D excess_over(const BasicFunc2D& f, const Rational& t);
Rational integrate(const BasicFunc2D& f);
Rational exceedance_measure(const BasicFunc2D& f, const Rational& t);

/// xΩ × [a, b).
struct Box2D {
    Bits prefix;
    Interval interval;

    Rational measure() const {
        return Rational::pow2(-static_cast<long>(prefix.size())) * interval.length();
    }
    friend bool operator==(const Box2D&, const Box2D&) = default;
};

/// Finite union of boxes. Canonical form: cylinders pairwise disjoint, each
/// slice a sorted list of disjoint non-touching intervals, and no sibling
/// pair with identical slices (they merge into the parent).
class OpenSet2D {
public:
    OpenSet2D() = default;
    explicit OpenSet2D(const std::vector<Box2D>& boxes);

    const std::map<Bits, std::vector<Interval>>& slices() const { return slices_; }
    std::vector<Box2D> boxes() const;
    bool empty() const { return slices_.empty(); }
    Rational measure() const;
    std::size_t depth() const;

    bool contains(std::string_view bits, const Rational& r) const;
    /// The slice over the cylinder containing `bits` (empty if none).
    std::vector<Interval> slice_at(std::string_view bits) const;
    /// Every interval endpoint used by any slice.
    std::set<Rational> breakpoints() const;

    friend bool operator==(const OpenSet2D&, const OpenSet2D&) = default;

private:
    std::map<Bits, std::vector<Interval>> slices_;
};

OpenSet2D set_union(const OpenSet2D& a, const OpenSet2D& b);
/// {z : f(z) > t}, strict; requires t >= 0.
OpenSet2D exceedance_set(const BasicFunc2D& f, const Rational& t);

}  // namespace randlab
