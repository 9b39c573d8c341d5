#include <doctest.h>

#include "randlab/test_functions.hpp"
#include "randlab/toy_machine.hpp"

using namespace randlab;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

ModelHeader header(ModelKind k, std::size_t max_length) { return {"hand", k, 0, 0, max_length}; }

PrefixModel doubling_prefix(std::size_t n) {
    std::map<Bits, std::optional<unsigned>> e;
    for (const auto& x : all_strings_up_to(n)) e.emplace(x, 2 * x.size() + 1);
    return PrefixModel(header(ModelKind::Prefix, n), e);
}

ToyMachineConfig cfg(ModelKind k, unsigned len, unsigned long budget, std::size_t out) {
    ToyMachineConfig c;
    c.kind = k;
    c.max_program_length = len;
    c.step_budget = budget;
    c.max_output_length = out;
    return c;
}

}  // namespace

TEST_CASE("validate_model on hand tables") {
    const PlainModel one(header(ModelKind::Plain, 0), {{"", 0u}});
    CHECK(validate_model(one).passed);

    const auto rep = validate_model(doubling_prefix(6));
    CHECK(rep.passed);
    CHECK(rep.kraft_sum == R(127, 128));

    const PlainModel bad(header(ModelKind::Plain, 0), {{"", 0u}, {"0", 0u}});
    const auto r2 = validate_model(bad);
    CHECK_FALSE(r2.passed);
    REQUIRE(r2.violations.size() >= 1);
    CHECK(r2.violations[0].m == 1);

    const PlainModel gap(header(ModelKind::Plain, 1), {{"", 0u}, {"0", 1u}});
    CHECK_FALSE(validate_model(gap).coverage_ok);
    CHECK_THROWS_AS(validate_model(PlainModel(header(ModelKind::Plain, 0), {})), InputError);
}

TEST_CASE("semimeasure") {
    const PrefixModel m(header(ModelKind::Prefix, 1), {{"", 3u}, {"0", std::nullopt}, {"1", 2u}});
    CHECK(semimeasure(m, "") == R(1, 8));
    CHECK(semimeasure(m, "0") == R(0));
    CHECK_THROWS_AS(semimeasure(m, "00"), DomainError);
}

TEST_CASE("toy machine semantics") {
    CHECK(run_toy_machine(ModelKind::Plain, "", 100, 12) == Bits(""));
    CHECK(run_toy_machine(ModelKind::Plain, "0101", 100, 12) == Bits("101"));
    // assembly: append 1, double, complement-append, halt
    CHECK(run_toy_machine(ModelKind::Plain, "1" "01" "10" "110" "111", 100, 12) == Bits("1100"));
    CHECK(run_toy_machine(ModelKind::Plain, "1" "01" "10" "110" "111" "01", 100, 12) == Bits("1100"));
    // PREFIX literal: gamma(3) = 011 announces two bits
    CHECK(run_toy_machine(ModelKind::Prefix, "0" "011" "10", 100, 12) == Bits("10"));
    CHECK(run_toy_machine(ModelKind::Prefix, "0" "011" "1", 100, 12) == std::nullopt);
    CHECK(run_toy_machine(ModelKind::Prefix, "0" "011" "100", 100, 12) == std::nullopt);
    CHECK(run_toy_machine(ModelKind::Prefix, "0" "1", 100, 12) == Bits(""));
    CHECK(run_toy_machine(ModelKind::Prefix, "1" "00" "111", 100, 12) == Bits("0"));
    CHECK(run_toy_machine(ModelKind::Prefix, "1" "00", 100, 12) == std::nullopt);
    // budget: boot 1 + append 2 + halt 1
    CHECK(run_toy_machine(ModelKind::Prefix, "1" "00" "111", 4, 12) == Bits("0"));
    CHECK(run_toy_machine(ModelKind::Prefix, "1" "00" "111", 3, 12) == std::nullopt);
    CHECK(run_toy_machine(ModelKind::Plain, "0", 0, 12) == std::nullopt);
    CHECK(run_toy_machine(ModelKind::Plain, "0111", 100, 2) == std::nullopt);
}

TEST_CASE("zero budget gives an empty table") {
    for (auto k : {ModelKind::Plain, ModelKind::Prefix}) {
        const auto t = enumerate_toy_machine(cfg(k, 8, 0, 4));
        std::visit(
            [](const auto& m) {
                for (const auto& [x, v] : m.entries()) CHECK_FALSE(v.has_value());
                const auto rep = validate_model(m);
                CHECK(rep.passed);
                CHECK(rep.kraft_sum == R(0));
            },
            t);
    }
}

TEST_CASE("machine tables validate and are deterministic") {
    for (unsigned len : {6u, 9u, 12u}) {
        const auto p = enumerate_plain(cfg(ModelKind::Plain, len, 10000, 8));
        const auto k = enumerate_prefix(cfg(ModelKind::Prefix, len, 10000, 8));
        CHECK(validate_model(p).passed);
        CHECK(validate_model(k).passed);
        CHECK(enumerate_plain(cfg(ModelKind::Plain, len, 10000, 8)) == p);
        CHECK(enumerate_prefix(cfg(ModelKind::Prefix, len, 10000, 8)) == k);
    }
}

TEST_CASE("property: fraction bound on plain tables") {
    const auto p = enumerate_plain(cfg(ModelKind::Plain, 12, 10000, 10));
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            unsigned long count = 0;
            for (const auto& x : all_strings(n)) {
                const auto c = p.lookup(x);
                if (c && *c + k < n) ++count;
            }
            CHECK(count < (1UL << (n - k)));
        }
}

TEST_CASE("property: more resources never hurt") {
    for (auto kind : {ModelKind::Plain, ModelKind::Prefix}) {
        const std::pair<unsigned, unsigned long> grid[] = {{6, 8}, {6, 40}, {9, 8}, {9, 40}, {11, 10000}};
        for (const auto& [l1, b1] : grid)
            for (const auto& [l2, b2] : grid) {
                if (l2 < l1 || b2 < b1) continue;
                const auto small = enumerate_toy_machine(cfg(kind, l1, b1, 7));
                const auto big = enumerate_toy_machine(cfg(kind, l2, b2, 7));
                std::visit(
                    [&](const auto& s) {
                        const auto& g = std::get<std::decay_t<decltype(s)>>(big);
                        for (const auto& [x, v] : s.entries()) {
                            if (!v) continue;
                            const auto w = g.lookup(x);
                            REQUIRE(w.has_value());
                            CHECK(*w <= *v);
                        }
                    },
                    small);
            }
    }
}

TEST_CASE("profile") {
    const PlainModel plain(header(ModelKind::Plain, 3), [] {
        std::map<Bits, std::optional<unsigned>> e;
        for (const auto& x : all_strings_up_to(3)) e.emplace(x, static_cast<unsigned>(x.size()));
        return e;
    }());
    const auto prefix = doubling_prefix(3);
    CHECK(profile(plain, prefix, "").empty());
    const auto rows = profile(plain, prefix, "0110");
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.plain_gap == 0);
        // n + K(binary n) - K(x_1..x_n), K(y) = 2|y| + 1
        const long kn = 2 * static_cast<long>(binary_of(r.n).size()) + 1;
        CHECK(r.prefix_gap == static_cast<long>(r.n) + kn - (2 * static_cast<long>(r.n) + 1));
    }
}

TEST_CASE("plain test function") {
    const PlainModel one(header(ModelKind::Plain, 0), {{"", 0u}});
    const auto f = plain_test_fn(one, 1);
    CHECK(f == BasicFunc::constant(R(1, 2)));
    CHECK(integrate(f) == R(1, 2));
    CHECK(plain_test_fn(one, 0).is_zero());

    const auto p = enumerate_plain(cfg(ModelKind::Plain, 10, 10000, 8));
    for (unsigned m = 0; m <= 12; ++m) {
        const auto fm = plain_test_fn(p, m);
        CHECK(integrate(fm) <= R(1));
        for (const auto& [x, c] : p.entries())
            if (c && *c < m && m <= x.size())
                for (const auto& t : all_strings(fm.depth() > x.size() ? fm.depth() - x.size() : 0))
                    CHECK(fm.at(x + t) >= Rational::pow2(static_cast<long>(x.size()) - m));
    }
    CHECK_THROWS_AS(plain_test_fn(p, 12, 3), ResourceError);
}

TEST_CASE("Gacs sum and its decomposition") {
    const PrefixModel lam(header(ModelKind::Prefix, 0), {{"", 1u}});
    CHECK(gacs_sum(lam, 0) == BasicFunc::constant(R(1, 2)));
    CHECK(prefix_test_seq(lam, 0) == BasicFunc::constant(R(1, 2)));

    const PrefixModel two(header(ModelKind::Prefix, 1), {{"", 1u}, {"0", 2u}, {"1", 2u}});
    const auto f1 = prefix_test_seq(two, 1);
    CHECK(f1.at("0") == R(1, 2));
    CHECK(f1.at("1") == R(1, 2));

    const auto d = doubling_prefix(6);
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto g = gacs_sum(d, n);
        const Rational expect = R(1) - Rational::pow2(-static_cast<long>(n) - 1);
        for (const auto& x : all_strings(n)) CHECK(g.at(x) == expect);
        CHECK(integrate(g) == expect);
    }

    const auto k = enumerate_prefix(cfg(ModelKind::Prefix, 12, 10000, 6));
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto g = gacs_sum(k, n);
        Rational mass;
        for (const auto& x : all_strings_up_to(n)) mass += semimeasure(k, x);
        CHECK(integrate(g) == mass);
        CHECK(integrate(g) <= R(1));
        BasicFunc sum(n);
        for (std::size_t i = 0; i <= n; ++i) sum = fsum(sum, prefix_test_seq(k, i));
        CHECK(sum.refined(n) == g);
    }
}
