#include <doctest.h>

#include "randlab/generators.hpp"
#include "randlab/io.hpp"
#include "randlab/toy_machine.hpp"

using namespace randlab;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

ModelHeader header(ModelKind k, std::size_t max_length) {
    return ModelHeader{std::string(kToyMachineId), k, 4, 100, max_length};
}

template <class F>
int parse_line(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("sha256 of known inputs") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("model tables round-trip and detect tampering") {
    PlainModel m(header(ModelKind::Plain, 1), {{"", 0u}, {"0", 2u}, {"1", std::nullopt}});
    const std::string text = write_model(m);
    CHECK(text.rfind("# randlab-model ", 0) == 0);
    CHECK(text.find("\n- 0\n0 2\n1 U\n") != std::string::npos);
    CHECK(read_plain_model(text) == m);
    CHECK(peek_model_kind(text) == ModelKind::Plain);
    CHECK_THROWS_AS(read_prefix_model(text), ParseError);

    std::string tampered = text;
    tampered.replace(tampered.find("0 2"), 3, "0 3");
    CHECK_THROWS_AS(read_plain_model(tampered), ParseError);

    ToyMachineConfig cfg;
    cfg.kind = ModelKind::Prefix;
    cfg.max_program_length = 9;
    cfg.max_output_length = 6;
    const auto p = enumerate_prefix(cfg);
    CHECK(read_prefix_model(write_model(p)) == p);
    CHECK(write_model(read_prefix_model(write_model(p))) == write_model(p));
}

TEST_CASE("model parse errors carry positions") {
    const std::string good = write_model(PlainModel(header(ModelKind::Plain, 0), {{"", 1u}}));
    const std::string body_only = good.substr(good.find('\n') + 1);
    CHECK(parse_line([&] { read_plain_model("# randlab-model max_length=0\n" + body_only); }) == 1);
    std::string bad = good;
    bad.replace(bad.find("\n- 1"), 4, "\n- x");
    CHECK(parse_line([&] { read_plain_model(bad); }) == 2);
}

TEST_CASE("open sets round-trip") {
    CHECK(write_openset(OpenSet()) == "");
    CHECK(read_openset("") == OpenSet());
    const OpenSet u(std::vector<Bits>{"01", "1", "000"});
    CHECK(write_openset(u) == "000\n01\n1\n");
    CHECK(read_openset(write_openset(u)) == u);
    CHECK(read_openset("\n1\n").measure() == R(1, 2));
    CHECK(parse_line([] { read_openset("0\n01x\n"); }) == 2);

    gen::Rng rng(3);
    for (int n = 0; n < 200; ++n) {
        const auto v = gen::open_set(rng, 7, R(1));
        CHECK(read_openset(write_openset(v)) == v);
    }
}

TEST_CASE("basic functions round-trip") {
    const auto f = BasicFunc::indicator("01", R(3, 7));
    const std::string t = write_basic_func(f);
    CHECK(t == "depth 2\n01 3/7\n");
    CHECK(read_basic_func(t) == f);
    CHECK(read_basic_func("depth 0\n- 2\n") == BasicFunc::constant(R(2), 0));
    CHECK_THROWS_AS(read_basic_func("depth 2\n01 0.5\n"), ParseError);
    CHECK(parse_line([] { read_basic_func("depth 2\n01 1/2\n0 1\n"); }) == 3);
    CHECK(parse_line([] { read_basic_func("depth 1\n1 -1\n"); }) == 2);

    gen::Rng rng(5);
    for (int n = 0; n < 200; ++n) {
        const auto g = gen::basic_func(rng, 6, R(3));
        CHECK(read_basic_func(write_basic_func(g)) == g);
    }
}

TEST_CASE("2-D functions and open sets round-trip") {
    const BasicFunc2D g(1, {{"0", StepFn::box(R(0), R(2), R(1, 2))},
                            {"1", StepFn({R(0), R(1, 3), R(1)}, {R(1), R(2)})}});
    const std::string t = write_basic_func_2d(g);
    CHECK(read_basic_func_2d(t) == g);
    CHECK(read_basic_func_2d("depth 1\n0 0 1 1\n0 1/2 2 1\n") ==
          BasicFunc2D(1, {{"0", StepFn({R(0), R(1, 2), R(1), R(2)}, {R(1), R(2), R(1)})}}));
    CHECK_THROWS_AS(read_basic_func_2d("depth 1\n0 1 1 1\n"), ParseError);

    const OpenSet2D w({Box2D{"0", {R(0), R(1)}}, Box2D{"0", {R(1), R(3)}}, Box2D{"11", {R(1, 2), R(1)}}});
    CHECK(w.measure() == R(3, 2) + R(1, 8));
    CHECK(read_openset_2d(write_openset_2d(w)) == w);
    CHECK(read_openset_2d("") == OpenSet2D());

    gen::Rng rng(9);
    for (int n = 0; n < 100; ++n) {
        const auto inst = gen::slow_cover_2d_instance(rng);
        for (const auto& h : inst.gs.items()) CHECK(read_basic_func_2d(write_basic_func_2d(h)) == h);
        const auto r = slow_cover_2d(inst.gs, inst.eps, inst.rho);
        CHECK(read_openset_2d(write_openset_2d(r.W)) == r.W);
    }
}

TEST_CASE("traces round-trip through CSV") {
    gen::Rng rng(13);
    for (int n = 0; n < 100; ++n) {
        const auto inst = gen::slow_cover_instance(rng);
        const auto r = slow_cover(inst.fs, inst.eps);
        const std::string csv = trace_csv(r.trace);
        const auto back = read_trace_csv(csv);
        CHECK(trace_csv(back) == csv);
        CHECK(back.T == r.T);
    }
    CHECK_THROWS_AS(read_trace_csv("i,t\n"), ParseError);
    CHECK_THROWS_AS(read_trace_csv(""), ParseError);
    CHECK(read_plain_model("# randlab-model kind=PLAIN\n- 0\n").entries().size() == 1);
    CHECK(parse_line([] { read_trace_csv("i,integral_added,t,delta_t,exceedance_measure,i1_ok,i2_lhs,i2_rhs\n1,1,0,0,0,maybe,0,1\n"); }) == 2);
}
