#include "randlab/generators.hpp"

#include <algorithm>

namespace randlab::gen {

std::uint64_t between(Rng& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

namespace {

Bits random_bits(Rng& rng, std::size_t n) {
    Bits x;
    for (std::size_t i = 0; i < n; ++i) x += (rng() & 1) ? '1' : '0';
    return x;
}

Rational small_positive(Rng& rng) {
    static const long dens[] = {1, 2, 3, 4, 8};
    return Rational(static_cast<long>(between(rng, 1, 8)), dens[rng() % 5]);
}

template <class T>
T pick(Rng& rng, std::initializer_list<T> xs) {
    return *(xs.begin() + rng() % xs.size());
}

}  // namespace

OpenSet open_set(Rng& rng, std::size_t max_depth, const Rational& cap) {
    OpenSet u;
    const std::uint64_t tries = between(rng, 0, 6);
    for (std::uint64_t k = 0; k < tries; ++k) {
        const OpenSet next = set_union(u, OpenSet(std::vector<Bits>{random_bits(rng, between(rng, 1, max_depth))}));
        if (next.measure() <= cap) u = next;
    }
    return u;
}

BasicFunc basic_func(Rng& rng, std::size_t max_depth, const Rational& cap) {
    const std::size_t depth = between(rng, 0, max_depth);
    std::map<Bits, Rational> values;
    for (const auto& x : all_strings(depth))
        if (rng() % 3 == 0) values.emplace(x, small_positive(rng));
    BasicFunc f(depth, std::move(values));
    const Rational total = integrate(f);
    if (total > cap) f = scale(f, cap / total * Rational(static_cast<long>(between(rng, 1, 4)), 4));
    return f;
}

Tail tail(Rng& rng, std::size_t L, std::size_t max_period) {
    if (rng() % 3 == 0) return Tail::repeat_last();
    return Tail::cycle(between(rng, 1, std::min(L, max_period)));
}

ConidisInstance conidis_instance(Rng& rng) {
    const Rational eps = pick(rng, {Rational(1, 4), Rational(1, 2)});
    const Rational eps_prime = rng() % 2 ? eps + Rational(1, 8) : Rational(3, 4);
    const std::size_t L = between(rng, 1, 20);
    std::vector<OpenSet> items;
    for (std::size_t i = 0; i < L; ++i) items.push_back(open_set(rng, 6, eps));
    return {SetSeq(std::move(items), tail(rng, L, 4)), EpsilonSchedule::geometric_gap(eps, eps_prime)};
}

FatouInstance fatou_instance(Rng& rng) {
    const Rational eps = pick(rng, {Rational(1, 4), Rational(1, 2), Rational(1)});
    const Rational eps_prime = rng() % 2 ? eps + Rational(1, 8) : eps * Rational(3, 2);
    const std::size_t L = between(rng, 1, 12);
    std::vector<BasicFunc> items;
    for (std::size_t i = 0; i < L; ++i) items.push_back(basic_func(rng, 5, eps));
    return {FuncSeq(std::move(items), tail(rng, L, 4)), EpsilonSchedule::geometric_gap(eps, eps_prime)};
}

SlowCoverInstance slow_cover_instance(Rng& rng) {
    const Rational eps = pick(rng, {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1)});
    const std::size_t L = between(rng, 1, 15);
    std::vector<BasicFunc> items;
    for (std::size_t i = 0; i < L; ++i) items.push_back(basic_func(rng, 5, Rational(2)));
    return {FuncSeq(std::move(items), Tail::zero()), eps};
}

namespace {

StepFn random_step(Rng& rng) {
    const std::size_t pieces = between(rng, 1, 7);
    std::set<Rational> cuts;
    while (cuts.size() < pieces) cuts.insert(Rational(static_cast<long>(between(rng, 1, 16)), 4));
    std::vector<Rational> breaks{Rational()};
    breaks.insert(breaks.end(), cuts.begin(), cuts.end());
    std::vector<Rational> values;
    for (std::size_t j = 0; j < pieces; ++j) values.push_back(rng() % 4 == 0 ? Rational() : small_positive(rng));
    return StepFn(std::move(breaks), std::move(values));
}

}  // namespace

SlowCover2DInstance slow_cover_2d_instance(Rng& rng) {
    const Rational eps = pick(rng, {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)});
    const std::size_t L = between(rng, 1, 8);
    std::vector<BasicFunc2D> items;
    for (std::size_t i = 0; i < L; ++i) {
        const std::size_t depth = between(rng, 0, 3);
        std::map<Bits, StepFn> slices;
        for (const auto& x : all_strings(depth))
            if (rng() % 2 == 0) slices.emplace(x, random_step(rng));
        items.emplace_back(depth, std::move(slices));
    }
    SeriesSpec rho;
    switch (rng() % 3) {
        case 0: rho = SeriesSpec::telescoping(pick(rng, {Rational(1, 4), Rational(1), Rational(4)})); break;
        case 1: rho = SeriesSpec::geometric(pick(rng, {Rational(1, 2), Rational(2)}), Rational(1, 2)); break;
        default: rho = SeriesSpec::telescoping(Rational(1), 3); break;
    }
    return {Func2DSeq(std::move(items), Tail::zero()), eps, rho};
}

DelayInstance delay_instance(Rng& rng) {
    DelayInstance d;
    const std::size_t rows = between(rng, 1, 8);
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Rational> row;
        Rational v;
        const std::size_t len = between(rng, 1, 5);
        for (std::size_t j = 0; j < len; ++j) {
            if (rng() % 4) v += Rational(static_cast<long>(between(rng, 1, 4)), 8);
            row.push_back(v);
        }
        d.approx.rows.push_back(std::move(row));
    }
    switch (rng() % 3) {
        case 0: d.schedule.kind = DelaySchedule::Kind::RowMajor; break;
        case 1: d.schedule.kind = DelaySchedule::Kind::Diagonal; break;
        default: {
            d.schedule.kind = DelaySchedule::Kind::Explicit;
            std::vector<std::size_t> next(rows, 1);
            std::size_t left = 0;
            for (const auto& r : d.approx.rows) left += r.size();
            while (left > 0) {
                const std::size_t i = rng() % rows;
                if (next[i] > d.approx.rows[i].size()) continue;
                d.schedule.order.emplace_back(i + 1, next[i]++);
                --left;
            }
        }
    }
    return d;
}

}  // namespace randlab::gen
