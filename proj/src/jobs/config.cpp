#include "randlab/jobs/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "randlab/io.hpp"

namespace randlab::jobs {

namespace {

struct KindName {
    JobKind kind;
    const char* name;
    const char* sub;
};

constexpr KindName kKinds[] = {
    {JobKind::ValidateModel, "VALIDATE_MODEL", "validate-model"},
    {JobKind::EnumerateMachine, "ENUMERATE_MACHINE", "enumerate-machine"},
    {JobKind::Profile, "PROFILE", "profile"},
    {JobKind::PlainTest, "PLAIN_TEST", "plain-test"},
    {JobKind::Gacs, "GACS", "gacs"},
    {JobKind::Tails, "TAILS", "tails"},
    {JobKind::Conidis, "CONIDIS", "conidis"},
    {JobKind::Fatou, "FATOU", "fatou"},
    {JobKind::SlowCover, "SLOW_COVER", "slow-cover"},
    {JobKind::SlowCover2D, "SLOW_COVER_2D", "slow-cover-2d"},
    {JobKind::QPipeline, "Q_PIPELINE", "q-pipeline"},
};

}  // namespace

std::string to_string(JobKind k) {
    for (const auto& e : kKinds)
        if (e.kind == k) return e.name;
    return "?";
}

std::optional<JobKind> parse_job_kind(const std::string& s) {
    for (const auto& e : kKinds)
        if (s == e.name) return e.kind;
    return std::nullopt;
}

std::string subcommand_name(JobKind k) {
    for (const auto& e : kKinds)
        if (e.kind == k) return e.sub;
    return "?";
}

std::vector<JobKind> all_job_kinds() {
    std::vector<JobKind> out;
    for (const auto& e : kKinds) out.push_back(e.kind);
    return out;
}

std::optional<JobKind> parse_subcommand(const std::string& s) {
    for (const auto& e : kKinds)
        if (s == e.sub) return e.kind;
    return std::nullopt;
}

namespace {

[[noreturn]] void fail(const YAML::Node& n, const std::string& msg) {
    const auto m = n.Mark();
    if (m.is_null()) throw ParseError(msg, 0, 0);
    throw ParseError(msg, m.line + 1, m.column + 1);
}

std::string scalar(const YAML::Node& n, const std::string& what) {
    if (!n.IsScalar()) fail(n, what + " must be a scalar");
    return n.Scalar();
}

Rational rational(const YAML::Node& n, const std::string& what) {
    const std::string s = scalar(n, what);
    try {
        return Rational::parse(s);
    } catch (const InputError& e) {
        fail(n, what + ": " + e.what());
    }
}

std::uint64_t uint_of(const YAML::Node& n, const std::string& what) {
    const std::string s = scalar(n, what);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        fail(n, what + " must be a non-negative integer");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        fail(n, what + " is out of range");
    }
}

long long_of(const YAML::Node& n, const std::string& what) {
    const std::string s = scalar(n, what);
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(n, what + " must be an integer");
    }
}

Bits bits_of(const YAML::Node& n, const std::string& what) {
    const std::string s = scalar(n, what);
    if (s == "-" || s.empty()) return {};
    if (!is_bits(s)) fail(n, what + " must be a bit string or '-'");
    return s;
}

class Parser {
public:
    Parser(std::filesystem::path base, JobConfig& cfg) : base_(std::move(base)), cfg_(cfg) {}

    // Accepts a bare path or {file: path}.
    std::string read_file(const YAML::Node& node) {
        YAML::Node n = node;
        if (node.IsMap()) {
            check_keys(node, {"file"}, "file reference");
            n = need(node, "file");
        }
        const std::string rel = scalar(n, "file");
        const auto path = base_ / rel;
        std::ifstream in(path, std::ios::binary);
        if (!in) fail(n, "cannot read file '" + rel + "'");
        std::ostringstream os;
        os << in.rdbuf();
        cfg_.inputs.push_back({rel, sha256_hex(os.str())});
        return os.str();
    }

    template <class F>
    auto from_file(const YAML::Node& n, F&& reader) {
        const std::string text = read_file(n);
        try {
            return reader(text);
        } catch (const ParseError& e) {
            fail(n, "in '" + cfg_.inputs.back().name + "': " + e.what());
        } catch (const Error& e) {
            fail(n, "in '" + cfg_.inputs.back().name + "': " + e.what());
        }
    }

    void check_keys(const YAML::Node& n, const std::set<std::string>& allowed, const std::string& what) {
        if (!n.IsMap()) fail(n, what + " must be a mapping");
        for (const auto& kv : n) {
            const std::string key = kv.first.as<std::string>();
            if (!allowed.count(key)) fail(kv.first, "unknown key '" + key + "' in " + what);
        }
    }

    const YAML::Node need(const YAML::Node& n, const std::string& key) {
        const YAML::Node v = n[key];
        if (!v) fail(n, "missing required key '" + key + "'");
        return v;
    }

    OpenSet open_set(const YAML::Node& n) {
        if (n.IsMap()) {
            check_keys(n, {"file"}, "open set");
            return from_file(need(n, "file"), [](const std::string& t) { return read_openset(t); });
        }
        if (!n.IsSequence()) fail(n, "open set must be a list of prefixes or {file: path}");
        std::vector<Bits> xs;
        for (const auto& e : n) xs.push_back(bits_of(e, "prefix"));
        return OpenSet(xs);
    }

    BasicFunc basic_func(const YAML::Node& n) {
        if (!n.IsMap()) fail(n, "function must be a mapping");
        if (n["file"]) {
            check_keys(n, {"file"}, "function");
            return from_file(n["file"], [](const std::string& t) { return read_basic_func(t); });
        }
        if (n["indicator"]) {
            check_keys(n, {"indicator", "value"}, "function");
            const Bits x = bits_of(n["indicator"], "indicator");
            const Rational v = n["value"] ? rational(n["value"], "value") : Rational(1);
            if (v.sign() < 0) fail(n["value"], "value must be non-negative");
            return BasicFunc::indicator(x, v);
        }
        if (n["constant"]) {
            check_keys(n, {"constant", "depth"}, "function");
            const Rational v = rational(n["constant"], "constant");
            if (v.sign() < 0) fail(n["constant"], "constant must be non-negative");
            return BasicFunc::constant(v, n["depth"] ? uint_of(n["depth"], "depth") : 0);
        }
        check_keys(n, {"depth", "values"}, "function");
        const std::size_t depth = uint_of(need(n, "depth"), "depth");
        std::map<Bits, Rational> values;
        if (const auto vs = n["values"]) {
            if (!vs.IsMap()) fail(vs, "values must map prefixes to rationals");
            for (const auto& kv : vs) {
                const Bits x = bits_of(kv.first, "prefix");
                if (x.size() != depth) fail(kv.first, "prefix length differs from depth");
                const Rational v = rational(kv.second, "value");
                if (v.sign() < 0) fail(kv.second, "value must be non-negative");
                values[x] = v;
            }
        }
        return BasicFunc(depth, values);
    }

    BasicFunc2D basic_func_2d(const YAML::Node& n) {
        if (!n.IsMap()) fail(n, "2-D function must be a mapping");
        if (n["file"]) {
            check_keys(n, {"file"}, "2-D function");
            return from_file(n["file"], [](const std::string& t) { return read_basic_func_2d(t); });
        }
        check_keys(n, {"depth", "boxes"}, "2-D function");
        const std::size_t depth = uint_of(need(n, "depth"), "depth");
        std::map<Bits, StepFn> slices;
        if (const auto bs = n["boxes"]) {
            if (!bs.IsSequence()) fail(bs, "boxes must be a list of [prefix, lo, hi, value]");
            for (const auto& b : bs) {
                if (!b.IsSequence() || b.size() != 4) fail(b, "box must be [prefix, lo, hi, value]");
                const Bits x = bits_of(b[0], "prefix");
                if (x.size() != depth) fail(b[0], "prefix length differs from depth");
                const Rational lo = rational(b[1], "lo");
                const Rational hi = rational(b[2], "hi");
                const Rational v = rational(b[3], "value");
                if (lo.sign() < 0 || !(lo < hi)) fail(b, "box needs 0 <= lo < hi");
                if (v.sign() < 0) fail(b[3], "value must be non-negative");
                slices[x] = combine(FuncOp::Sum, slices[x], StepFn::box(lo, hi, v));
            }
        }
        return BasicFunc2D(depth, std::move(slices));
    }

    template <class T, class Item>
    SeqSpec<T> sequence(const YAML::Node& n, Item&& item) {
        check_keys(n, {"items", "tail"}, "sequence");
        const YAML::Node items = need(n, "items");
        if (!items.IsSequence() || items.size() == 0) fail(items, "items must be a non-empty list");
        std::vector<T> xs;
        for (const auto& e : items) xs.push_back(item(e));
        Tail tail = Tail::zero();
        if (n["tail"]) {
            try {
                tail = Tail::parse(scalar(n["tail"], "tail"));
            } catch (const InputError& e) {
                fail(n["tail"], e.what());
            }
        }
        try {
            return SeqSpec<T>(std::move(xs), tail);
        } catch (const InputError& e) {
            fail(n, e.what());
        }
    }

    TailForm tail_form(const YAML::Node& n) {
        std::istringstream is(scalar(n, "series tail"));
        std::string kind;
        is >> kind;
        std::vector<std::string> args;
        for (std::string a; is >> a;) args.push_back(a);
        const auto arg = [&](std::size_t i) {
            try {
                return Rational::parse(args.at(i));
            } catch (const std::out_of_range&) {
                fail(n, "series tail " + kind + " is missing an argument");
            } catch (const InputError& e) {
                fail(n, e.what());
            }
        };
        if (kind == "ZERO" && args.empty()) return TailForm::zero();
        if (kind == "GEOMETRIC" && args.size() == 2) return TailForm::geometric(arg(0), arg(1));
        if (kind == "TELESCOPING" && args.size() == 1) return TailForm::telescoping(arg(0));
        fail(n, "series tail must be ZERO, GEOMETRIC <first> <ratio>, or TELESCOPING <scale>");
    }

    SeriesSpec series(const YAML::Node& n) {
        try {
            if (n.IsScalar()) return SeriesSpec({}, tail_form(n));
            if (n.IsSequence()) {
                std::vector<Rational> terms;
                for (const auto& e : n) terms.push_back(rational(e, "term"));
                return SeriesSpec::finite(terms);
            }
            check_keys(n, {"head", "tail"}, "series");
            std::vector<Rational> head;
            if (const auto h = n["head"]) {
                if (!h.IsSequence()) fail(h, "head must be a list");
                for (const auto& e : h) head.push_back(rational(e, "term"));
            }
            return SeriesSpec(head, n["tail"] ? tail_form(n["tail"]) : TailForm::zero());
        } catch (const SpecificationError& e) {
            fail(n, e.what());
        }
    }

    template <class Model>
    Model model(const YAML::Node& n, Model (*reader)(std::string_view)) {
        return from_file(n, [&](const std::string& t) { return reader(t); });
    }

    JobConfig& cfg() { return cfg_; }

private:
    std::filesystem::path base_;
    JobConfig& cfg_;
};

std::vector<LazyPoint> points_of(const YAML::Node& n, Parser& p) {
    if (n.IsMap()) {
        p.check_keys(n, {"max_prefix", "max_cycle"}, "points");
        return LazyPoint::enumerate(uint_of(p.need(n, "max_prefix"), "max_prefix"),
                                    uint_of(p.need(n, "max_cycle"), "max_cycle"));
    }
    if (!n.IsSequence()) fail(n, "points must be a list of 'prefix(cycle)' or {max_prefix, max_cycle}");
    std::vector<LazyPoint> out;
    for (const auto& e : n) {
        const std::string s = scalar(e, "point");
        const auto open = s.find('(');
        if (open == std::string::npos || s.back() != ')') fail(e, "point must look like prefix(cycle)");
        std::string pre = s.substr(0, open);
        if (pre == "-") pre.clear();
        const std::string cyc = s.substr(open + 1, s.size() - open - 2);
        if (!is_bits(pre) || cyc.empty() || !is_bits(cyc)) fail(e, "point must look like prefix(cycle)");
        out.emplace_back(pre, cyc);
    }
    return out;
}

DelaySchedule schedule_of(const YAML::Node& n) {
    DelaySchedule s;
    if (n.IsScalar()) {
        if (n.Scalar() == "ROW_MAJOR") return s;
        if (n.Scalar() == "DIAGONAL") {
            s.kind = DelaySchedule::Kind::Diagonal;
            return s;
        }
        fail(n, "schedule must be ROW_MAJOR, DIAGONAL, or a list of [row, step]");
    }
    if (!n.IsSequence()) fail(n, "schedule must be ROW_MAJOR, DIAGONAL, or a list of [row, step]");
    s.kind = DelaySchedule::Kind::Explicit;
    for (const auto& e : n) {
        if (!e.IsSequence() || e.size() != 2) fail(e, "schedule entry must be [row, step]");
        s.order.emplace_back(uint_of(e[0], "row"), uint_of(e[1], "step"));
    }
    return s;
}

}  // namespace

JobConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
    }
    if (!root.IsMap()) throw ParseError("config must be a mapping", 1, 1);

    JobConfig cfg;
    cfg.config_sha256 = sha256_hex(text);
    Parser p(base_dir, cfg);
    const YAML::Node job = p.need(root, "job");
    const auto kind = parse_job_kind(scalar(job, "job"));
    if (!kind) fail(job, "unknown job kind '" + job.Scalar() + "'");
    cfg.kind = *kind;

    std::set<std::string> keys{"job", "seed"};
    const auto allow = [&](std::initializer_list<const char*> ks) { keys.insert(ks.begin(), ks.end()); };
    switch (cfg.kind) {
        case JobKind::ValidateModel: allow({"model"}); break;
        case JobKind::EnumerateMachine: allow({"kind", "max_program_length", "step_budget", "max_output_length"}); break;
        case JobKind::Profile: allow({"plain_model", "prefix_model", "x"}); break;
        case JobKind::PlainTest: allow({"model", "m", "depth_cap"}); break;
        case JobKind::Gacs: allow({"model", "depth"}); break;
        case JobKind::Tails: allow({"a", "b", "c", "horizon", "delay", "random"}); break;
        case JobKind::Conidis:
        case JobKind::Fatou: allow({"sequence", "eps", "eps_prime", "levels", "block_cap", "random"}); break;
        case JobKind::SlowCover: allow({"sequence", "eps", "random"}); break;
        case JobKind::SlowCover2D: allow({"sequence", "eps", "rho", "random"}); break;
        case JobKind::QPipeline: allow({"sequence", "a", "rho", "k_min", "k_max", "horizon", "points"}); break;
    }
    p.check_keys(root, keys, "job config");

    if (root["seed"]) cfg.seed = uint_of(root["seed"], "seed");
    if (root["random"]) {
        cfg.random_instances = uint_of(root["random"], "random");
        if (cfg.random_instances == 0) fail(root["random"], "random must be positive");
    }
    const bool random = cfg.random_instances > 0;
    const auto opt_rational = [&](const char* key) -> std::optional<Rational> {
        if (!root[key]) return std::nullopt;
        return rational(root[key], key);
    };

    switch (cfg.kind) {
        case JobKind::ValidateModel: {
            const YAML::Node m = p.need(root, "model");
            const std::string text_m = p.read_file(m);
            cfg.inputs.pop_back();
            ModelKind mk;
            try {
                mk = peek_model_kind(text_m);
            } catch (const ParseError& e) {
                fail(m, e.what());
            }
            if (mk == ModelKind::Plain)
                cfg.plain = p.model<PlainModel>(m, read_plain_model);
            else
                cfg.prefix = p.model<PrefixModel>(m, read_prefix_model);
            break;
        }
        case JobKind::EnumerateMachine: {
            const YAML::Node k = p.need(root, "kind");
            try {
                cfg.machine.kind = parse_model_kind(scalar(k, "kind"));
            } catch (const InputError& e) {
                fail(k, e.what());
            }
            if (root["max_program_length"])
                cfg.machine.max_program_length = uint_of(root["max_program_length"], "max_program_length");
            if (root["step_budget"]) cfg.machine.step_budget = uint_of(root["step_budget"], "step_budget");
            if (root["max_output_length"])
                cfg.machine.max_output_length = uint_of(root["max_output_length"], "max_output_length");
            break;
        }
        case JobKind::Profile:
            cfg.plain = p.model<PlainModel>(p.need(root, "plain_model"), read_plain_model);
            cfg.prefix = p.model<PrefixModel>(p.need(root, "prefix_model"), read_prefix_model);
            cfg.x = bits_of(p.need(root, "x"), "x");
            break;
        case JobKind::PlainTest:
            cfg.plain = p.model<PlainModel>(p.need(root, "model"), read_plain_model);
            cfg.m = static_cast<unsigned>(uint_of(p.need(root, "m"), "m"));
            if (root["depth_cap"]) cfg.depth_cap = uint_of(root["depth_cap"], "depth_cap");
            break;
        case JobKind::Gacs:
            cfg.prefix = p.model<PrefixModel>(p.need(root, "model"), read_prefix_model);
            cfg.depth = uint_of(p.need(root, "depth"), "depth");
            break;
        case JobKind::Tails: {
            if (root["a"] || root["b"]) {
                cfg.a = p.series(p.need(root, "a"));
                cfg.b = p.series(p.need(root, "b"));
            }
            if (auto c = opt_rational("c")) {
                if (c->sign() <= 0) fail(root["c"], "c must be positive");
                cfg.c = *c;
            }
            if (root["horizon"]) cfg.horizon = uint_of(root["horizon"], "horizon");
            if (const auto d = root["delay"]) {
                p.check_keys(d, {"rows", "schedule"}, "delay");
                const auto rows = p.need(d, "rows");
                if (!rows.IsSequence()) fail(rows, "rows must be a list of lists");
                ApproxMatrix m;
                for (const auto& r : rows) {
                    if (!r.IsSequence()) fail(r, "row must be a list of rationals");
                    std::vector<Rational> row;
                    for (const auto& v : r) row.push_back(rational(v, "approximation"));
                    m.rows.push_back(std::move(row));
                }
                cfg.approx = std::move(m);
                if (d["schedule"]) cfg.schedule = schedule_of(d["schedule"]);
            }
            if (!cfg.a && !cfg.approx && !random) fail(root, "TAILS needs a/b series, a delay matrix, or random");
            break;
        }
        case JobKind::Conidis:
        case JobKind::Fatou: {
            if (root["block_cap"]) cfg.block_cap = uint_of(root["block_cap"], "block_cap");
            if (random) {
                if (root["sequence"] || root["eps"] || root["eps_prime"] || root["levels"])
                    fail(root["random"], "random suites generate their own sequences and epsilons");
                break;
            }
            const YAML::Node seq = p.need(root, "sequence");
            if (cfg.kind == JobKind::Conidis)
                cfg.sets = p.sequence<OpenSet>(seq, [&](const YAML::Node& e) { return p.open_set(e); });
            else
                cfg.funcs = p.sequence<BasicFunc>(seq, [&](const YAML::Node& e) { return p.basic_func(e); });
            const Rational eps = rational(p.need(root, "eps"), "eps");
            const Rational eps_prime = rational(p.need(root, "eps_prime"), "eps_prime");
            EpsilonSchedule s = EpsilonSchedule::geometric_gap(eps, eps_prime);
            if (const auto lv = root["levels"]) {
                if (lv.IsScalar() && lv.Scalar() == "GEOMETRIC_GAP") {
                } else if (lv.IsSequence()) {
                    std::vector<Rational> levels;
                    for (const auto& e : lv) levels.push_back(rational(e, "level"));
                    s = EpsilonSchedule::explicit_levels(eps, eps_prime, levels);
                } else {
                    fail(lv, "levels must be GEOMETRIC_GAP or a list of rationals");
                }
            }
            try {
                s.validate();
            } catch (const InputError& e) {
                fail(root["eps"], e.what());
            }
            cfg.eps_schedule = s;
            break;
        }
        case JobKind::SlowCover:
        case JobKind::SlowCover2D: {
            if (random) {
                if (root["sequence"] || root["eps"] || root["rho"])
                    fail(root["random"], "random suites generate their own sequences and epsilons");
                break;
            }
            const YAML::Node seq = p.need(root, "sequence");
            if (cfg.kind == JobKind::SlowCover)
                cfg.funcs = p.sequence<BasicFunc>(seq, [&](const YAML::Node& e) { return p.basic_func(e); });
            else {
                cfg.funcs2d = p.sequence<BasicFunc2D>(seq, [&](const YAML::Node& e) { return p.basic_func_2d(e); });
                cfg.rho = p.series(p.need(root, "rho"));
            }
            cfg.eps = rational(p.need(root, "eps"), "eps");
            if (cfg.eps.sign() <= 0) fail(root["eps"], "eps must be positive");
            break;
        }
        case JobKind::QPipeline: {
            cfg.funcs = p.sequence<BasicFunc>(p.need(root, "sequence"),
                                              [&](const YAML::Node& e) { return p.basic_func(e); });
            cfg.a = p.series(p.need(root, "a"));
            cfg.rho = p.series(p.need(root, "rho"));
            cfg.k_min = long_of(p.need(root, "k_min"), "k_min");
            cfg.k_max = long_of(p.need(root, "k_max"), "k_max");
            if (cfg.k_min > cfg.k_max) fail(root["k_max"], "k_max must be >= k_min");
            if (root["horizon"]) cfg.horizon = uint_of(root["horizon"], "horizon");
            if (root["points"]) cfg.points = points_of(root["points"], p);
            break;
        }
    }
    return cfg;
}

JobConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read config '" + path.string() + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str(), path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

}  // namespace randlab::jobs
