#include "randlab/jobs/jobs.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "randlab/generators.hpp"
#include "randlab/io.hpp"
#include "randlab/liminf.hpp"

namespace randlab::jobs {

bool Report::passed() const {
    if (error) return false;
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

ExitCode Report::exit_code() const {
    if (error) return error_code;
    return passed() ? ExitCode::Pass : ExitCode::InvariantFailed;
}

namespace {

std::string body_text(const Report& r) {
    std::ostringstream os;
    os << "randlab report\n";
    os << "job: " << to_string(r.kind) << '\n';
    for (const auto& [k, v] : r.echo) os << "echo " << k << ": " << v << '\n';
    for (const auto& c : r.checks) {
        os << "check " << c.name << ": " << (c.passed ? "PASS" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ')';
        os << '\n';
    }
    for (const auto& [k, v] : r.values) os << "value " << k << ": " << v << '\n';
    for (const auto& a : r.artifacts) os << "artifact " << a.name << ": sha256 " << sha256_hex(a.content) << '\n';
    if (r.error) os << "error: " << *r.error << '\n';
    os << "status: " << (r.passed() ? "PASS" : "FAIL") << " (exit " << static_cast<int>(r.exit_code()) << ")\n";
    return os.str();
}

}  // namespace

std::string Report::digest() const { return sha256_hex(body_text(*this)); }

std::string Report::text() const { return body_text(*this) + "digest: " + digest() + '\n'; }

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["job"] = to_string(kind);
    j["echo"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : echo) j["echo"][k] = v;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["values"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : values) j["values"][k] = v;
    j["artifacts"] = nlohmann::ordered_json::array();
    for (const auto& a : artifacts) j["artifacts"].push_back({{"name", a.name}, {"sha256", sha256_hex(a.content)}});
    if (error) j["error"] = *error;
    j["passed"] = passed();
    j["exit_status"] = static_cast<int>(exit_code());
    j["digest"] = digest();
    return j.dump(2) + '\n';
}

const Check* Report::find_check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const std::string* Report::find_value(const std::string& name) const {
    for (const auto& [k, v] : values)
        if (k == name) return &v;
    return nullptr;
}

std::size_t cap_bytes_from_env(std::size_t fallback) {
    const char* s = std::getenv("RANDLAB_CAP_BYTES");
    if (!s || !*s) return fallback;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != std::string(s).size()) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError("RANDLAB_CAP_BYTES must be a byte count");
    }
}

namespace {

// Rough per-cylinder cost of a map entry holding a rational.
constexpr std::size_t kBytesPerCell = 128;

class Runner {
public:
    Runner(const JobConfig& cfg, const RunOptions& opts, Report& rep) : cfg_(cfg), opts_(opts), rep_(rep) {}

    void run();

private:
    void check(const std::string& name, bool ok, std::string detail = {}) {
        rep_.checks.push_back({name, ok, std::move(detail)});
    }
    void value(const std::string& name, std::string v) { rep_.values.emplace_back(name, std::move(v)); }
    void artifact(const std::string& name, std::string content) {
        rep_.artifacts.push_back({name, std::move(content)});
    }

    void require_depth(std::size_t depth, const std::string& what) {
        if (depth > opts_.max_depth)
            throw ResourceError(what + " depth " + std::to_string(depth) + " exceeds --max-depth " +
                                std::to_string(opts_.max_depth));
        const std::size_t cells = depth >= 60 ? SIZE_MAX : (std::size_t(1) << depth);
        if (cells > opts_.cap_bytes / kBytesPerCell)
            throw ResourceError(what + " at depth " + std::to_string(depth) + " needs about " +
                                std::to_string(cells) + " cells, above the memory cap of " +
                                std::to_string(opts_.cap_bytes) + " bytes");
    }
    template <class Seq>
    void require_seq_depth(const Seq& s) {
        std::size_t d = 0;
        for (const auto& f : s.items()) d = std::max(d, f.depth());
        require_depth(d, "input");
    }

    void validate_model_job();
    void enumerate_job();
    void profile_job();
    void plain_test_job();
    void gacs_job();
    void tails_job();
    void conidis_job();
    void fatou_job();
    void slow_cover_job();
    void slow_cover_2d_job();
    void q_pipeline_job();

    template <class M>
    void model_checks(const M& m);

    const JobConfig& cfg_;
    const RunOptions& opts_;
    Report& rep_;
};

// Tallies one named check across the instances of a generated suite.
class Tally {
public:
    void add(const std::string& name, bool ok) {
        auto& [pass, total] = counts_[order(name)];
        pass += ok;
        ++total;
    }
    void emit(std::vector<Check>& out) const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const auto& [pass, total] = counts_.at(i);
            out.push_back({names_[i], pass == total, std::to_string(pass) + "/" + std::to_string(total)});
        }
    }

private:
    std::size_t order(const std::string& name) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        names_.push_back(name);
        return names_.size() - 1;
    }
    std::vector<std::string> names_;
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> counts_;
};

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

template <class M>
void Runner::model_checks(const M& m) {
    const auto rep = validate_model(m);
    check("coverage of every string up to max_length", rep.coverage_ok,
          rep.missing.empty() ? "" : "first missing: " + bits_token(rep.missing.front()));
    std::size_t defined = 0;
    for (const auto& [x, v] : m.entries()) defined += v.has_value();
    if constexpr (M::kind == ModelKind::Plain) {
        check("counting bound |{x : C(x) < m}| < 2^m for every m", rep.violations.empty(),
              rep.violations.empty() ? "" : "first failing m = " + std::to_string(rep.violations.front().m));
    } else {
        check("Kraft sum <= 1", rep.kraft_sum <= Rational(1));
        value("kraft_sum", rep.kraft_sum.str());
    }
    value("model_kind", to_string(M::kind));
    value("machine_id", m.header().machine_id);
    value("entries", std::to_string(m.entries().size()));
    value("defined_entries", std::to_string(defined));
    value("table_digest", model_digest(m));
}

void Runner::validate_model_job() {
    if (cfg_.plain) model_checks(*cfg_.plain);
    if (cfg_.prefix) model_checks(*cfg_.prefix);
}

void Runner::enumerate_job() {
    const auto& mc = cfg_.machine;
    rep_.echo.emplace_back("kind", to_string(mc.kind));
    rep_.echo.emplace_back("max_program_length", std::to_string(mc.max_program_length));
    rep_.echo.emplace_back("step_budget", std::to_string(mc.step_budget));
    rep_.echo.emplace_back("max_output_length", std::to_string(mc.max_output_length));
    require_depth(mc.max_output_length + 1, "table");
    require_depth(mc.max_program_length, "program enumeration");
    const auto table = enumerate_toy_machine(mc);
    std::visit(
        [&](const auto& m) {
            model_checks(m);
            const std::string text = write_model(m);
            using M = std::decay_t<decltype(m)>;
            M back;
            if constexpr (M::kind == ModelKind::Plain)
                back = read_plain_model(text);
            else
                back = read_prefix_model(text);
            check("serialized table re-parses to an equal table", back == m);
            artifact("model.txt", text);
        },
        table);
}

void Runner::profile_job() {
    const auto rows = profile(*cfg_.plain, *cfg_.prefix, cfg_.x);
    const std::size_t expect = std::min({cfg_.x.size(), cfg_.plain->max_length(), cfg_.prefix->max_length()});
    check("one row per prefix length within both tables", rows.size() == expect);
    const auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("U"); };
    std::string csv = "n,plain_gap,prefix_gap,plain_running_min,prefix_running_min\n";
    for (const auto& r : rows)
        csv += std::to_string(r.n) + ',' + opt(r.plain_gap) + ',' + opt(r.prefix_gap) + ',' +
               opt(r.plain_running_min) + ',' + opt(r.prefix_running_min) + '\n';
    value("rows", std::to_string(rows.size()));
    if (!rows.empty()) {
        value("final_plain_running_min", opt(rows.back().plain_running_min));
        value("final_prefix_running_min", opt(rows.back().prefix_running_min));
    }
    artifact("profile.csv", csv);
}

void Runner::plain_test_job() {
    require_depth(std::min(cfg_.depth_cap, cfg_.plain->max_length()), "plain test function");
    const auto f = plain_test_fn(*cfg_.plain, cfg_.m, cfg_.depth_cap);
    const Rational total = integrate(f);
    check("integral <= 1", total <= Rational(1));
    bool lower = true;
    const BasicFunc dense = f.refined(f.depth());
    for (const auto& [x, c] : cfg_.plain->entries()) {
        if (!c || *c >= cfg_.m || cfg_.m > x.size()) continue;
        const Rational need = Rational::pow2(static_cast<long>(x.size()) - static_cast<long>(cfg_.m));
        // every cylinder at f's depth below x, absent ones included
        for (const auto& t : all_strings(f.depth() - x.size())) lower = lower && dense.at(x + t) >= need;
    }
    check("f_m >= 2^{|x|-m} on xΩ whenever C(x) < m <= |x|", lower);
    value("m", std::to_string(cfg_.m));
    value("depth", std::to_string(f.depth()));
    value("integral", total.str());
    artifact("f.txt", write_basic_func(f));
}

void Runner::gacs_job() {
    require_depth(cfg_.depth, "Gacs sum");
    if (cfg_.depth > cfg_.prefix->max_length())
        throw InputError("depth " + std::to_string(cfg_.depth) + " exceeds the table's max_length");
    const auto g = gacs_sum(*cfg_.prefix, cfg_.depth);
    const Rational total = integrate(g);
    Rational mass;
    for (const auto& x : all_strings_up_to(cfg_.depth)) mass += semimeasure(*cfg_.prefix, x);
    BasicFunc sum(cfg_.depth);
    for (std::size_t i = 0; i <= cfg_.depth; ++i) sum = fsum(sum, prefix_test_seq(*cfg_.prefix, i));
    check("integral equals the semimeasure mass up to depth", total == mass);
    check("integral <= 1", total <= Rational(1));
    check("equals the sum of prefix test terms on every cylinder", sum.refined(cfg_.depth) == g);
    value("depth", std::to_string(cfg_.depth));
    value("integral", total.str());
    artifact("gacs.txt", write_basic_func(g));
}

void Runner::tails_job() {
    if (cfg_.a) {
        const auto v = tails_bounded(*cfg_.a, *cfg_.b, cfg_.c, cfg_.horizon);
        value("c", cfg_.c.str());
        value("horizon", std::to_string(cfg_.horizon));
        value("verdict", v.str());
        value("verdict_note", v.note);
    }
    const auto delay_checks = [](const ApproxMatrix& m, const DelaySchedule& s, auto&& sink) {
        const auto d = series_delay(m, s);
        Rational total;
        for (const auto& row : m.rows) total += row.back();
        sink("delayed series has the same total", d.series.total() == total);
        sink("delayed tails dominate the limit tails", delay_tail_violations(m, d).empty());
        return d;
    };
    if (cfg_.approx) {
        const auto d = delay_checks(*cfg_.approx, cfg_.schedule,
                                    [&](const std::string& n, bool ok) { check(n, ok); });
        std::string terms;
        for (const auto& t : d.series.head()) terms += (terms.empty() ? "" : " ") + t.str();
        value("delayed_terms", terms);
        value("first_positions", join(d.first_position));
    }
    if (cfg_.random_instances) {
        gen::Rng rng(cfg_.seed);
        Tally t;
        for (std::size_t n = 0; n < cfg_.random_instances; ++n) {
            const auto inst = gen::delay_instance(rng);
            delay_checks(inst.approx, inst.schedule, [&](const std::string& name, bool ok) { t.add(name, ok); });
        }
        t.emit(rep_.checks);
    }
}

void Runner::conidis_job() {
    const auto one = [&](const SetSeq& spec, const EpsilonSchedule& s, auto&& sink) {
        const auto r = conidis_cover(spec, s, cfg_.block_cap);
        sink("stabilized", r.stabilized);
        sink("measure(V) <= eps'", r.cover.measure() <= s.eps_prime);
        sink("liminf contained in V", r.stabilized && r.cover.contains(liminf_sets(spec)));
        bool shrink = true;
        for (std::size_t j = 0; j < r.blocks.size_history.size(); ++j) {
            const auto& h = r.blocks.size_history[j];
            const Rational gap = s.level(j + 1) - s.level(j);
            for (std::size_t e = 1; e < h.size(); ++e) shrink = shrink && h[e - 1] - h[e] > gap;
        }
        sink("every extension shrinks its block by more than the level gap", shrink);
        return r;
    };
    if (cfg_.random_instances) {
        gen::Rng rng(cfg_.seed);
        Tally t;
        for (std::size_t n = 0; n < cfg_.random_instances; ++n) {
            const auto inst = gen::conidis_instance(rng);
            one(inst.spec, inst.sched, [&](const std::string& name, bool ok) { t.add(name, ok); });
        }
        t.emit(rep_.checks);
        return;
    }
    require_seq_depth(*cfg_.sets);
    const auto r = one(*cfg_.sets, *cfg_.eps_schedule, [&](const std::string& n, bool ok) { check(n, ok); });
    value("eps", cfg_.eps_schedule->eps.str());
    value("eps_prime", cfg_.eps_schedule->eps_prime.str());
    value("measure_V", r.cover.measure().str());
    value("liminf_measure", liminf_sets(*cfg_.sets).measure().str());
    value("blocks", std::to_string(r.blocks.blocks.size()));
    value("cut_points", join(r.blocks.cut_points));
    artifact("V.txt", write_openset(r.cover));
}

void Runner::fatou_job() {
    const auto one = [&](const FuncSeq& spec, const EpsilonSchedule& s, auto&& sink) {
        const auto r = fatou_bound(spec, s, cfg_.block_cap);
        sink("stabilized", r.stabilized);
        sink("integral(phi) <= eps'", integrate(r.phi) <= s.eps_prime);
        bool below = r.stabilized;
        for (const auto& p : LazyPoint::enumerate(5, 3))
            below = below && liminf_pointwise(spec, p) <= ExtRational::finite(r.phi.at(p));
        sink("liminf <= phi at every test point", below);
        bool blocks = true;
        for (const auto& b : r.blocks.blocks) blocks = blocks && fmax(b, r.phi) == r.phi.refined(std::max(b.depth(), r.phi.depth()));
        sink("phi dominates every block minimum", blocks);
        return r;
    };
    if (cfg_.random_instances) {
        gen::Rng rng(cfg_.seed);
        Tally t;
        for (std::size_t n = 0; n < cfg_.random_instances; ++n) {
            const auto inst = gen::fatou_instance(rng);
            one(inst.spec, inst.sched, [&](const std::string& name, bool ok) { t.add(name, ok); });
        }
        t.emit(rep_.checks);
        return;
    }
    require_seq_depth(*cfg_.funcs);
    const auto r = one(*cfg_.funcs, *cfg_.eps_schedule, [&](const std::string& n, bool ok) { check(n, ok); });
    value("eps", cfg_.eps_schedule->eps.str());
    value("eps_prime", cfg_.eps_schedule->eps_prime.str());
    value("integral_phi", integrate(r.phi).str());
    value("blocks", std::to_string(r.blocks.blocks.size()));
    value("cut_points", join(r.blocks.cut_points));
    artifact("phi.txt", write_basic_func(r.phi));
}

template <class Sink>
void trace_checks(const SlowCoverTrace& tr, Sink&& sink) {
    bool i1 = true, i2 = true, mono = true;
    Rational prev;
    for (const auto& s : tr.steps) {
        i1 = i1 && s.i1_ok && s.exceedance_measure <= tr.eps;
        i2 = i2 && s.i2_lhs <= s.i2_rhs;
        mono = mono && prev <= s.t;
        prev = s.t;
    }
    sink("I1 at every step", i1);
    sink("I2 at every step", i2);
    sink("thresholds non-decreasing", mono);
}

void Runner::slow_cover_job() {
    const auto one = [&](const FuncSeq& fs, const Rational& eps, auto&& sink) {
        const auto r = slow_cover(fs, eps);
        trace_checks(r.trace, sink);
        sink("measure(W) <= eps", r.W.measure() <= eps);
        sink("coverage check without counterexamples", slow_cover_coverage_check(fs, eps, r).passed());
        return r;
    };
    if (cfg_.random_instances) {
        gen::Rng rng(cfg_.seed);
        Tally t;
        for (std::size_t n = 0; n < cfg_.random_instances; ++n) {
            const auto inst = gen::slow_cover_instance(rng);
            one(inst.fs, inst.eps, [&](const std::string& name, bool ok) { t.add(name, ok); });
        }
        t.emit(rep_.checks);
        return;
    }
    require_seq_depth(*cfg_.funcs);
    const auto r = one(*cfg_.funcs, cfg_.eps, [&](const std::string& n, bool ok) { check(n, ok); });
    value("eps", cfg_.eps.str());
    value("T", r.T.str());
    value("measure_W", r.W.measure().str());
    artifact("trace.csv", trace_csv(r.trace));
    artifact("W.txt", write_openset(r.W));
    artifact("S.txt", write_basic_func(r.S));
}

void Runner::slow_cover_2d_job() {
    const auto one = [&](const Func2DSeq& gs, const Rational& eps, const SeriesSpec& rho, auto&& sink) {
        const auto r = slow_cover_2d(gs, eps, rho);
        trace_checks(r.trace, sink);
        sink("T * eps <= sum of integrals", r.threshold_bound_ok);
        sink("measure(W) <= eps", r.W.measure() <= eps);
        sink("corner-grid coverage without counterexamples", r.coverage.passed());
        return r;
    };
    if (cfg_.random_instances) {
        gen::Rng rng(cfg_.seed);
        Tally t;
        for (std::size_t n = 0; n < cfg_.random_instances; ++n) {
            const auto inst = gen::slow_cover_2d_instance(rng);
            one(inst.gs, inst.eps, inst.rho, [&](const std::string& name, bool ok) { t.add(name, ok); });
        }
        t.emit(rep_.checks);
        return;
    }
    require_seq_depth(*cfg_.funcs2d);
    const auto r = one(*cfg_.funcs2d, cfg_.eps, *cfg_.rho, [&](const std::string& n, bool ok) { check(n, ok); });
    value("eps", cfg_.eps.str());
    value("T", r.T.str());
    value("sum_integrals", r.total_integral.str());
    value("measure_W", r.W.measure().str());
    value("coverage_cells", std::to_string(r.coverage.cells_checked));
    artifact("trace.csv", trace_csv(r.trace));
    artifact("W.txt", write_openset_2d(r.W));
}

void Runner::q_pipeline_job() {
    require_seq_depth(*cfg_.funcs);
    const auto r = q_pipeline(*cfg_.funcs, *cfg_.a, *cfg_.rho, cfg_.k_min, cfg_.k_max, cfg_.points, cfg_.horizon);
    for (const auto& d : r.grid)
        value("k=" + std::to_string(d.k), "eps=" + d.eps.str() + " T=" + d.T.str() + " max_dt_over_rho=" +
                                              d.max_ratio.str() + " admissible=" + (d.admissible ? "yes" : "no") +
                                              " measure_W=" + d.measure_w.str());
    bool grid_ok = true;
    for (const auto& d : r.grid) grid_ok = grid_ok && d.threshold_bound_ok && d.coverage_ok;
    check("every k: T * eps <= sum of integrals and coverage holds", grid_ok);
    if (r.status == QPipelineResult::Status::NoAdmissibleEpsilon) {
        value("status", "NO_ADMISSIBLE_EPSILON");
        return;
    }
    value("status", "ADMISSIBLE");
    value("selected_k", std::to_string(*r.selected_k));
    value("T", r.run->T.str());
    value("integral_Q", r.q->integral_q.str());
    value("measure_W", r.q->measure_w.str());
    trace_checks(r.run->trace, [&](const std::string& n, bool ok) { check(n, ok); });
    check("integral(Q) <= measure(W)", r.q->integral_ok());
    std::size_t bad = 0;
    std::string first_bad;
    for (const auto& d : r.domination)
        if (!d.ok && bad++ == 0) first_bad = d.point.str();
    check("Q dominates the certified ratio surrogate at every test point", bad == 0,
          std::to_string(r.domination.size() - bad) + "/" + std::to_string(r.domination.size()) +
              (bad ? ", first failure at " + first_bad : ""));
    std::string dom = "point,Q,certified_surrogate,horizon_ratio,ok\n";
    for (const auto& d : r.domination)
        dom += d.point.str() + ',' + d.q.str() + ',' + d.certified.str() + ',' + d.horizon_ratio.str() + ',' +
               (d.ok ? "true" : "false") + '\n';
    artifact("domination.csv", dom);
    artifact("trace.csv", trace_csv(r.run->trace));
    artifact("Q.txt", write_basic_func(r.q->Q));
    artifact("W.txt", write_openset_2d(r.run->W));
}

void Runner::run() {
    rep_.echo.emplace_back("config_sha256", cfg_.config_sha256);
    for (const auto& in : cfg_.inputs) rep_.echo.emplace_back("input " + in.name, in.sha256);
    rep_.echo.emplace_back("seed", std::to_string(cfg_.seed));
    if (cfg_.random_instances) rep_.echo.emplace_back("random_instances", std::to_string(cfg_.random_instances));
    rep_.echo.emplace_back("max_depth", std::to_string(opts_.max_depth));
    switch (cfg_.kind) {
        case JobKind::ValidateModel: validate_model_job(); break;
        case JobKind::EnumerateMachine: enumerate_job(); break;
        case JobKind::Profile: profile_job(); break;
        case JobKind::PlainTest: plain_test_job(); break;
        case JobKind::Gacs: gacs_job(); break;
        case JobKind::Tails: tails_job(); break;
        case JobKind::Conidis: conidis_job(); break;
        case JobKind::Fatou: fatou_job(); break;
        case JobKind::SlowCover: slow_cover_job(); break;
        case JobKind::SlowCover2D: slow_cover_2d_job(); break;
        case JobKind::QPipeline: q_pipeline_job(); break;
    }
}

}  // namespace

Report run_job(const JobConfig& cfg, const RunOptions& opts) {
    Report rep;
    rep.kind = cfg.kind;
    Runner runner(cfg, opts, rep);
    const auto fail = [&](ExitCode code, const std::string& msg) {
        rep.error = msg;
        rep.error_code = code;
    };
    try {
        runner.run();
    } catch (const ResourceError& e) {
        fail(ExitCode::ResourceError, std::string("resource: ") + e.what());
    } catch (const InternalError& e) {
        fail(ExitCode::InternalError, std::string("internal: ") + e.what());
    } catch (const std::bad_alloc&) {
        fail(ExitCode::ResourceError, "resource: out of memory");
    } catch (const Error& e) {
        fail(ExitCode::InputError, std::string("input: ") + e.what());
    }
    return rep;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const auto tmp = path.parent_path() / ("." + path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw InputError("failed writing '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

void write_outputs(const Report& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& a : report.artifacts) write_file_atomic(dir / a.name, a.content);
    write_file_atomic(dir / "report.json", report.json());
    write_file_atomic(dir / "report.txt", report.text());
}

}  // namespace randlab::jobs
