#pragma once

// Seeded random instances for the property suites. Everything draws from a
// std::mt19937_64 through plain modular reduction, so a seed fixes the
// instance on every platform.

#include <cstdint>
#include <random>

#include "randlab/block_cover.hpp"
#include "randlab/series.hpp"

namespace randlab::gen {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi].
std::uint64_t between(Rng& rng, std::uint64_t lo, std::uint64_t hi);

/// Random union of cylinders of depth 1..max_depth with measure <= cap.
OpenSet open_set(Rng& rng, std::size_t max_depth, const Rational& cap);
/// Random function at depth 0..max_depth with integral <= cap.
BasicFunc basic_func(Rng& rng, std::size_t max_depth, const Rational& cap);
/// REPEAT_LAST or CYCLE(p) with p <= min(max_period, L).
Tail tail(Rng& rng, std::size_t L, std::size_t max_period);

struct ConidisInstance {
    SetSeq spec;
    EpsilonSchedule sched;
};
/// depth <= 6, length <= 20, CYCLE(p <= 4) or REPEAT_LAST,
/// ε in {1/4, 1/2}, ε' in {ε + 1/8, 3/4}.
ConidisInstance conidis_instance(Rng& rng);

struct FatouInstance {
    FuncSeq spec;
    EpsilonSchedule sched;
};
/// depth <= 5, length <= 12, ∫f_i <= ε.
FatouInstance fatou_instance(Rng& rng);

struct SlowCoverInstance {
    FuncSeq fs;
    Rational eps;
};
/// length <= 15, depth <= 5, ZERO tail.
SlowCoverInstance slow_cover_instance(Rng& rng);

struct SlowCover2DInstance {
    Func2DSeq gs;
    Rational eps;
    SeriesSpec rho;
};
/// depth <= 3, length <= 8, <= 8 breakpoints per slice, ZERO tail.
SlowCover2DInstance slow_cover_2d_instance(Rng& rng);

struct DelayInstance {
    ApproxMatrix approx;
    DelaySchedule schedule;
};
/// <= 8 rows of <= 5 non-decreasing approximations; row-major, diagonal,
/// or a random interleaving that keeps each row in order.
DelayInstance delay_instance(Rng& rng);

}  // namespace randlab::gen
