#pragma once

// Threshold construction for series that converge too slowly. Starting from
// S_0 = 0, t_0 = 0, each step adds the next term, raises the threshold t_i
// minimally until {S_i > t_i} has measure <= ε, and lifts S_i to at least
// t_i. The cover is W = {S > T} with T the final threshold.
//
// Internally S_i is kept as t_i + E_i where E_i >= 0 is the finite-support
// excess, which is how the 2-D version (where max(S, t) has unbounded
// support in r) stays representable.

#include <cstddef>
#include <string>
#include <vector>

#include "randlab/plane.hpp"
#include "randlab/seq_spec.hpp"
#include "randlab/series.hpp"

namespace randlab {

struct SlowCoverStep {
    std::size_t i = 0;
    Rational integral_added;       // ∫ f_i
    Rational t;                    // t_i
    Rational delta_t;              // t_i - t_{i-1}
    Rational exceedance_measure;   // measure{S_i > t_i}
    bool i1_ok = false;            // exceedance_measure <= ε
    Rational i2_lhs;               // ε t_i + ∫(S_i - t_i)
    Rational i2_rhs;               // Σ_{k<=i} ∫ f_k
};

struct SlowCoverTrace {
    Rational eps;
    std::vector<SlowCoverStep> steps;
    Rational T;

    /// I1 and I2 at every step and t non-decreasing.
    bool invariants_hold() const;
};

struct SlowCoverResult {
    BasicFunc S;  // S_L = T + E_L, dense at the input depth
    Rational T;
    OpenSet W;
    SlowCoverTrace trace;
};

/// fs must have a ZERO tail; eps > 0. Throws InternalError if I1 or I2 ever
/// fails (the construction guarantees both).
SlowCoverResult slow_cover(const FuncSeq& fs, const Rational& eps);

struct CoverageCounterexample {
    Bits cylinder;
    Rational r;  // 0 for the 1-D check
    std::size_t i = 0;
};

struct CoverageReport {
    std::size_t cells_checked = 0;
    std::size_t premises_met = 0;  // cells where some tail exceeded its bound
    std::vector<CoverageCounterexample> counterexamples;
    bool passed() const { return counterexamples.empty(); }
};

/// For every cylinder at the input depth and every i: if Σ_{j>=i} f_j exceeds
/// T - t_{i-1} there, the cylinder must lie in W.
CoverageReport slow_cover_coverage_check(const FuncSeq& fs, const Rational& eps,
                                         const SlowCoverResult& result);

struct SlowCover2DResult {
    OpenSet2D W;
    Rational T;
    BasicFunc2D excess;  // E_L, so that S_L = T + E_L
    SlowCoverTrace trace;
    Rational total_integral;  // Σ ∫ g_i
    bool threshold_bound_ok = false;  // T · ε <= Σ ∫ g_i
    CoverageReport coverage;
};

/// Same construction on Ω × ℝ≥0 with comparison series rho. The coverage
/// check samples the corner of every cell of the common refinement: a cell
/// where Σ_{j>=i} g_j > Σ_{j>=i} ρ(j) and Δt_j <= ρ(j) for all j >= i must
/// lie in W.
SlowCover2DResult slow_cover_2d(const Func2DSeq& gs, const Rational& eps, const SeriesSpec& rho);

/// Trace as CSV, one row per step.
std::string trace_csv(const SlowCoverTrace& trace);

}  // namespace randlab
