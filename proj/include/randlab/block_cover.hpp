#pragma once

// Block covers of a liminf: the set version (Conidis) and the function
// version (constructive Fatou). Both pick cut points k_1 < k_2 < ... so that
// the union (pointwise max) of the block intersections (pointwise minima)
// U_{s..k} stays below ε' while containing the liminf.

#include <cstddef>
#include <vector>

#include "randlab/seq_spec.hpp"

namespace randlab {

/// Strictly increasing levels ε < ε_1 < ε_2 < ... < ε'.
struct EpsilonSchedule {
    enum class Rule { GeometricGap, Explicit };
    Rational eps;
    Rational eps_prime;
    Rule rule = Rule::GeometricGap;
    std::vector<Rational> levels;  // Explicit only

    static EpsilonSchedule geometric_gap(Rational eps, Rational eps_prime) {
        return {std::move(eps), std::move(eps_prime), Rule::GeometricGap, {}};
    }
    static EpsilonSchedule explicit_levels(Rational eps, Rational eps_prime, std::vector<Rational> lv) {
        return {std::move(eps), std::move(eps_prime), Rule::Explicit, std::move(lv)};
    }

    /// ε_j for j >= 1, and ε itself for j = 0. GeometricGap gives
    /// ε_j = ε' - (ε' - ε)·2^{-j}.
    Rational level(std::size_t j) const;
    /// Number of available levels (unbounded for GeometricGap).
    std::size_t max_blocks() const;
    void validate() const;
};

template <class T>
struct BlockDecomposition {
    std::vector<std::size_t> starts;      // s_j
    std::vector<std::size_t> cut_points;  // k_j
    std::vector<T> blocks;                // U_{s_j..k_j}
    std::vector<std::size_t> extensions;  // witness-driven extensions per block
    /// Measure (or integral) of block j after its initial item and after each extension.
    std::vector<std::vector<Rational>> size_history;
};

inline constexpr std::size_t kDefaultBlockCap = 1024;

struct ConidisResult {
    OpenSet cover;
    BlockDecomposition<OpenSet> blocks;
    bool stabilized = false;
};

struct FatouResult {
    BasicFunc phi;
    BlockDecomposition<BasicFunc> blocks;
    bool stabilized = false;
};

/// Requires measure(U_i) <= ε over the list and one tail period. Returns a
/// cover of measure <= ε'. `stabilized` is set once a closed block lies
/// entirely past the explicit list; every such block contains the liminf.
ConidisResult conidis_cover(const SetSeq& spec, const EpsilonSchedule& sched,
                            std::size_t block_cap = kDefaultBlockCap);

/// Requires ∫f_i <= ε over the list and one tail period. Returns φ with
/// ∫φ <= ε' and, when stabilized, liminf f_n <= φ pointwise.
FatouResult fatou_bound(const FuncSeq& spec, const EpsilonSchedule& sched,
                        std::size_t block_cap = kDefaultBlockCap);

}  // namespace randlab
