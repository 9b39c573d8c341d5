#include <doctest.h>

#include "randlab/generators.hpp"
#include "randlab/series.hpp"

using namespace randlab;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

const SeriesSpec kGeo = SeriesSpec::geometric(R(1, 2), R(1, 2));
const SeriesSpec kTel = SeriesSpec::telescoping(R(1));

}  // namespace

TEST_CASE("closed-form tails") {
    for (std::size_t N = 1; N <= 20; ++N) {
        CHECK(kGeo.tail_sum(N) == Rational::pow2(1 - static_cast<long>(N)));
        CHECK(kTel.tail_sum(N) == R(1, static_cast<long>(N)));
    }
    CHECK(kGeo.term(3) == R(1, 8));
    CHECK(kTel.term(3) == R(1, 12));
    const SeriesSpec mixed({R(5), R(0)}, TailForm::telescoping(R(1)));
    CHECK(mixed.tail_sum(1) == R(5) + R(1, 3));
    CHECK(mixed.tail_sum(3) == R(1, 3));
    CHECK_THROWS_AS(SeriesSpec({R(-1)}, TailForm::zero()), SpecificationError);
    CHECK_THROWS_AS(SeriesSpec::geometric(R(1), R(1)), SpecificationError);
}

TEST_CASE("tails_bounded examples") {
    CHECK(tails_bounded(kGeo, kTel, R(1), 10).kind == TailsVerdict::Kind::BoundedWitnessed);
    CHECK(tails_bounded(kGeo, kGeo, R(1), 10).kind == TailsVerdict::Kind::BoundedWitnessed);
    CHECK(tails_bounded(kTel, kTel, R(1), 10).kind == TailsVerdict::Kind::BoundedWitnessed);
    const auto v = tails_bounded(kTel, kGeo, R(1), 10);
    CHECK(v.kind == TailsVerdict::Kind::Violated);
    CHECK(v.n == 3);
    CHECK(v.str() == "VIOLATED(3)");
}

TEST_CASE("tails_bounded settles beyond the horizon") {
    // a-tail 2^{-N+1} vs c·2^{-N}: fails everywhere, c = 4 bounds it.
    const auto half = SeriesSpec::geometric(R(1, 4), R(1, 2));
    CHECK(tails_bounded(kGeo, half, R(4), 1).kind == TailsVerdict::Kind::BoundedWitnessed);
    CHECK(tails_bounded(kGeo, half, R(1), 1).kind == TailsVerdict::Kind::Violated);
    // slower geometric against faster one: violation found past the horizon
    const auto slow = SeriesSpec::geometric(R(1, 1000), R(9, 10));
    const auto v = tails_bounded(slow, kGeo, R(1), 5);
    CHECK(v.kind == TailsVerdict::Kind::Violated);
    CHECK(v.n > 5);
    // telescoping against eventually-zero b never settles
    const auto fin = SeriesSpec::finite({R(1), R(1)});
    CHECK(tails_bounded(kTel, fin, R(1), 2).kind == TailsVerdict::Kind::Violated);
    CHECK(tails_bounded(fin, kTel, R(4), 2).kind == TailsVerdict::Kind::BoundedWitnessed);
    CHECK_THROWS_AS(tails_bounded(kGeo, kTel, R(0), 2), InputError);
}

TEST_CASE("property: tails_bounded is reflexive and monotone in c") {
    gen::Rng rng(9001);
    const std::vector<Rational> cs = {R(1, 2), R(1), R(2), R(8)};
    for (int n = 0; n < 60; ++n) {
        const auto pick = [&]() {
            switch (rng() % 3) {
                case 0: return SeriesSpec::geometric(R(gen::between(rng, 1, 4), 4), R(gen::between(rng, 1, 7), 8),
                                                     gen::between(rng, 0, 3));
                case 1: return SeriesSpec::telescoping(R(gen::between(rng, 1, 4)), gen::between(rng, 0, 3));
                default: {
                    std::vector<Rational> t;
                    for (std::size_t i = gen::between(rng, 1, 6); i > 0; --i) t.push_back(R(gen::between(rng, 0, 3), 4));
                    return SeriesSpec::finite(t);
                }
            }
        };
        const auto a = pick();
        const auto b = pick();
        CHECK(tails_bounded(a, a, R(1), 8).kind == TailsVerdict::Kind::BoundedWitnessed);
        bool bounded = false;
        for (const auto& c : cs) {
            const auto v = tails_bounded(a, b, c, 8);
            if (bounded) CHECK(v.kind == TailsVerdict::Kind::BoundedWitnessed);
            if (v.kind == TailsVerdict::Kind::BoundedWitnessed) bounded = true;
        }
    }
}

TEST_CASE("series_delay examples") {
    const auto one = series_delay({{{R(1)}}}, {});
    CHECK(one.series == SeriesSpec::finite({R(1)}));

    const ApproxMatrix m{{{R(1), R(2)}, {R(3)}}};
    const auto d = series_delay(m, {});
    CHECK(d.series == SeriesSpec::finite({R(1), R(1), R(3)}));
    CHECK(d.series.total() == R(5));
    CHECK(d.first_position == std::vector<std::size_t>{1, 3});

    DelaySchedule diag;
    diag.kind = DelaySchedule::Kind::Diagonal;
    CHECK(series_delay(m, diag).series == SeriesSpec::finite({R(1), R(1), R(3)}));

    CHECK_THROWS_AS(series_delay({{{R(2), R(1)}}}, {}), SpecificationError);
    DelaySchedule bad;
    bad.kind = DelaySchedule::Kind::Explicit;
    bad.order = {{1, 1}, {2, 1}};
    CHECK_THROWS_AS(series_delay(m, bad), SpecificationError);
    bad.order = {{1, 1}, {1, 1}, {2, 1}};
    CHECK_THROWS_AS(series_delay(m, bad), SpecificationError);
}

TEST_CASE("property: series_delay preserves totals and never shrinks tails") {
    gen::Rng rng(31337);
    for (int n = 0; n < 300; ++n) {
        const auto inst = gen::delay_instance(rng);
        const auto d = series_delay(inst.approx, inst.schedule);
        Rational total;
        for (const auto& row : inst.approx.rows) total += row.back();
        CHECK(d.series.total() == total);
        CHECK(delay_tail_violations(inst.approx, d).empty());
        for (std::size_t i = 1; i <= d.series.head().size(); ++i) CHECK(d.series.term(i).sign() >= 0);
    }
}
