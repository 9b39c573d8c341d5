#pragma once

#include <cstddef>
#include <map>
#include <set>

#include "randlab/cantor.hpp"
#include "randlab/rational.hpp"

namespace randlab {

/// Non-negative rational step function on Cantor space that depends only on
/// the first `depth` bits. Stored sparsely: cylinders absent from the map
/// carry the value 0, and zero values are never stored. A dense function at
/// depth m costs 2^m map entries.
class BasicFunc {
public:
    BasicFunc() = default;
    explicit BasicFunc(std::size_t depth) : depth_(depth) {}
    /// Keys must all have length `depth`; values must be >= 0.
    BasicFunc(std::size_t depth, std::map<Bits, Rational> values);

    static BasicFunc constant(const Rational& c, std::size_t depth = 0);
    /// c · χ_{xΩ}
    static BasicFunc indicator(const Bits& prefix, const Rational& c = Rational(1));

    std::size_t depth() const { return depth_; }
    const std::map<Bits, Rational>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    /// Value on the cylinder determined by the first `depth` bits of `bits`.
    Rational at(std::string_view bits) const;
    Rational at(const LazyPoint& p) const { return at(p.head(depth_)); }

    /// Same function, represented at a larger depth.
    BasicFunc refined(std::size_t depth) const;
    /// Distinct values taken, including 0 when some cylinder carries 0.
    std::set<Rational> range() const;

    friend bool operator==(const BasicFunc&, const BasicFunc&) = default;

private:
    std::size_t depth_ = 0;
    std::map<Bits, Rational> values_;
};

enum class FuncOp { Min, Max, Sum };

BasicFunc combine(FuncOp op, const BasicFunc& f, const BasicFunc& g);
inline BasicFunc fmin(const BasicFunc& f, const BasicFunc& g) { return combine(FuncOp::Min, f, g); }
inline BasicFunc fmax(const BasicFunc& f, const BasicFunc& g) { return combine(FuncOp::Max, f, g); }
inline BasicFunc fsum(const BasicFunc& f, const BasicFunc& g) { return combine(FuncOp::Sum, f, g); }
/// c · f for rational c >= 0.
BasicFunc scale(const BasicFunc& f, const Rational& c);
/// Pointwise max(f, t) - t, i.e. the part of f above level t.
BasicFunc excess_over(const BasicFunc& f, const Rational& t);

/// ∫ f dP against the uniform measure.
Rational integrate(const BasicFunc& f);
/// {ω : f(ω) > t}, strict. Requires t >= 0.
OpenSet exceedance_set(const BasicFunc& f, const Rational& t);
/// Measure of {f > t} without building the set.
Rational exceedance_measure(const BasicFunc& f, const Rational& t);

}  // namespace randlab
