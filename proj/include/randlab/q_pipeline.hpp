#pragma once

// Lifting functions on Ω to graphs on Ω × ℝ≥0 and reading a function Q off
// a 2-D cover: Q(ω) is how far up from r = 0 the slice of W over ω reaches
// without a gap.

#include <cstddef>
#include <optional>
#include <vector>

#include "randlab/slow_cover.hpp"

namespace randlab {

/// a on {(ω, u) : u < f(ω)/a}, zero elsewhere; same integral as f.
BasicFunc2D lift_to_graph(const BasicFunc& f, const Rational& a);

struct QResult {
    BasicFunc Q;  // at W's depth
    Rational integral_q;
    Rational measure_w;
    bool integral_ok() const { return integral_q <= measure_w; }
};

/// Slices of a canonical OpenSet2D are bounded, so Q is always finite.
QResult extract_q(const OpenSet2D& W);

struct EpsilonDiagnostic {
    long k = 0;
    Rational eps;  // 2^k
    Rational T;
    ExtRational max_ratio;  // max_i Δt_i / ρ(i), inf when ρ(i) = 0 < Δt_i
    bool admissible = false;  // Δt_i <= ρ(i) for every i
    bool threshold_bound_ok = false;
    bool coverage_ok = false;
    Rational measure_w;
};

struct DominationRow {
    LazyPoint point;
    Rational q;
    /// max over certified i of min_{j=i..L} f_j(p)/a(j); i is certified when
    /// Σ_{j=i..L} Δt_j < Σ_{j=i..L} a(j). Q must dominate it.
    Rational certified;
    /// f_L(p)/a(L), the ratio at the end of the horizon (reported only).
    Rational horizon_ratio;
    bool ok = false;
};

struct QPipelineResult {
    enum class Status { Admissible, NoAdmissibleEpsilon };
    Status status = Status::NoAdmissibleEpsilon;
    std::vector<EpsilonDiagnostic> grid;
    std::optional<long> selected_k;
    std::optional<SlowCover2DResult> run;
    std::optional<QResult> q;
    std::vector<DominationRow> domination;

    bool passed() const;
};

inline constexpr std::size_t kDefaultTailsHorizon = 64;

/// fs with a ZERO tail, a positive on 1..L, ρ-tails <= a-tails everywhere.
/// Runs the 2-D cover for ε = 2^k, k = k_min..k_max, and keeps the smallest
/// k with Δt_i <= ρ(i) throughout.
QPipelineResult q_pipeline(const FuncSeq& fs, const SeriesSpec& a, const SeriesSpec& rho, long k_min,
                           long k_max, const std::vector<LazyPoint>& test_points,
                           std::size_t horizon = kDefaultTailsHorizon);

}  // namespace randlab
