#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "randlab/rational.hpp"

namespace randlab {

/// Closed form that continues a series past its explicit head.
struct TailForm {
    enum class Kind { Zero, Geometric, Telescoping };
    Kind kind = Kind::Zero;
    Rational first;  // Geometric: a_i = first · ratio^{i-1}
    Rational ratio;
    Rational scale;  // Telescoping: a_i = scale / (i(i+1))

    static TailForm zero() { return {}; }
    static TailForm geometric(Rational first, Rational ratio) {
        return {Kind::Geometric, std::move(first), std::move(ratio), {}};
    }
    static TailForm telescoping(Rational scale) { return {Kind::Telescoping, {}, {}, std::move(scale)}; }

    Rational term(std::size_t i) const;
    /// Σ_{i >= N} of the closed form, exact.
    Rational tail_from(std::size_t N) const;

    friend bool operator==(const TailForm&, const TailForm&) = default;
};

/// Non-negative series a_1, a_2, ...: explicit terms a_1..a_L followed by a
/// closed form for i > L, so every tail sum is an exact rational.
class SeriesSpec {
public:
    SeriesSpec() = default;
    SeriesSpec(std::vector<Rational> head, TailForm tail);

    /// Head filled from the closed form, so the whole series follows it.
    static SeriesSpec geometric(Rational first, Rational ratio, std::size_t head_len = 0);
    static SeriesSpec telescoping(Rational scale, std::size_t head_len = 0);
    static SeriesSpec finite(std::vector<Rational> terms) { return {std::move(terms), TailForm::zero()}; }

    const std::vector<Rational>& head() const { return head_; }
    const TailForm& tail() const { return tail_; }

    Rational term(std::size_t i) const;
    /// Σ_{i >= N} a_i for N >= 1.
    Rational tail_sum(std::size_t N) const;
    Rational total() const { return tail_sum(1); }

    friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;

private:
    std::vector<Rational> head_;
    TailForm tail_;
};

struct TailsVerdict {
    enum class Kind { BoundedWitnessed, Violated, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::size_t n = 0;  // first failing N when Violated
    std::string note;

    std::string str() const;
};

/// Decides whether Σ_{i>=N} a_i <= c · Σ_{i>=N} b_i for every N >= 1: checks
/// N <= horizon exactly and settles larger N from the closed forms when the
/// tail ratio is eventually non-increasing.
TailsVerdict tails_bounded(const SeriesSpec& a, const SeriesSpec& b, const Rational& c,
                           std::size_t horizon);

/// Row i holds lower approximations f_i^(1) <= ... <= f_i^(J_i) of term i.
struct ApproxMatrix {
    std::vector<std::vector<Rational>> rows;
    friend bool operator==(const ApproxMatrix&, const ApproxMatrix&) = default;
};

/// Order in which (row, step) increments are emitted; 1-based pairs.
struct DelaySchedule {
    enum class Kind { RowMajor, Diagonal, Explicit };
    Kind kind = Kind::RowMajor;
    std::vector<std::pair<std::size_t, std::size_t>> order;  // Explicit only

    std::vector<std::pair<std::size_t, std::size_t>> resolve(const ApproxMatrix& m) const;
};

struct DelayResult {
    SeriesSpec series;                        // the increments, ZERO tail
    std::vector<std::size_t> first_position;  // 1-based position of each row's first increment
};

/// Flattens the increments f_i^(j) - f_i^(j-1) into one series in schedule
/// order. Totals agree with Σ_i f_i^(J_i), and tails only grow.
DelayResult series_delay(const ApproxMatrix& approx, const DelaySchedule& schedule);

/// Rows N for which the output tail from min_{i>=N} first_position(i) falls
/// below Σ_{i>=N} f_i^(J_i). Always empty for a correct delay.
std::vector<std::size_t> delay_tail_violations(const ApproxMatrix& approx, const DelayResult& result);

}  // namespace randlab
