#include "randlab/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

#include "randlab/errors.hpp"

namespace randlab {

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw InternalError("SHA-256 failed");
    std::string out;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        out += buf;
    }
    return out;
}

std::string bits_token(const Bits& x) { return x.empty() ? "-" : x; }

namespace {

struct Token {
    std::string text;
    int column;
};

struct Line {
    int number;
    std::vector<Token> tokens;
};

// Splits into non-blank lines of whitespace-separated tokens. Lines starting
// with '#' are skipped unless keep_comments is set.
std::vector<Line> lex(std::string_view text, bool keep_comments = false) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            if (i >= raw.size()) break;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
            line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
            i = j;
        }
        const bool comment = !line.tokens.empty() && line.tokens[0].text[0] == '#';
        if (!line.tokens.empty() && (keep_comments || !comment)) out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& msg) {
    const int col = tok < l.tokens.size() ? l.tokens[tok].column : 1;
    throw ParseError(msg, l.number, col);
}

void expect_arity(const Line& l, std::size_t n) {
    if (l.tokens.size() != n)
        fail(l, std::min(n, l.tokens.size()), "expected " + std::to_string(n) + " fields, found " +
                                                  std::to_string(l.tokens.size()));
}

Bits bits_at(const Line& l, std::size_t tok) {
    const std::string& t = l.tokens[tok].text;
    if (t == "-") return {};
    if (!is_bits(t)) fail(l, tok, "expected a bit string or '-', found '" + t + "'");
    return t;
}

Rational rational_at(const Line& l, std::size_t tok) {
    try {
        return Rational::parse(l.tokens[tok].text);
    } catch (const InputError& e) {
        fail(l, tok, e.what());
    }
}

unsigned long ulong_of(const Line& l, std::size_t tok, const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        fail(l, tok, "expected a non-negative integer, found '" + text + "'");
    try {
        return std::stoul(text);
    } catch (const std::exception&) {
        fail(l, tok, "integer out of range: " + text);
    }
}

std::size_t depth_header(const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError("missing 'depth m' header", 1, 1);
    const Line& h = lines[0];
    if (h.tokens[0].text != "depth") fail(h, 0, "expected 'depth m' header");
    expect_arity(h, 2);
    return ulong_of(h, 1, h.tokens[1].text);
}

template <ModelKind K>
std::string body_of(const ComplexityTable<K>& m) {
    std::string out;
    for (const auto& [x, v] : m.entries()) out += bits_token(x) + ' ' + (v ? std::to_string(*v) : "U") + '\n';
    return out;
}

template <ModelKind K>
std::string write_table(const ComplexityTable<K>& m) {
    const auto& h = m.header();
    const std::string body = body_of(m);
    return "# randlab-model machine_id=" + h.machine_id + " kind=" + to_string(K) +
           " max_program_length=" + std::to_string(h.max_program_length) +
           " step_budget=" + std::to_string(h.step_budget) + " max_length=" + std::to_string(h.max_length) +
           " digest=" + sha256_hex(body) + "\n" + body;
}

template <ModelKind K>
ComplexityTable<K> read_table(std::string_view text) {
    const auto lines = lex(text, true);
    if (lines.empty() || lines[0].tokens[0].text != "#" || lines[0].tokens.size() < 2 ||
        lines[0].tokens[1].text != "randlab-model")
        throw ParseError("missing '# randlab-model' header", 1, 1);
    const Line& h = lines[0];
    ModelHeader header;
    std::string digest;
    bool saw_kind = false;
    for (std::size_t t = 2; t < h.tokens.size(); ++t) {
        const std::string& kv = h.tokens[t].text;
        const auto eq = kv.find('=');
        if (eq == std::string::npos) fail(h, t, "expected key=value, found '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        if (key == "machine_id")
            header.machine_id = val;
        else if (key == "kind") {
            try {
                header.kind = parse_model_kind(val);
            } catch (const InputError& e) {
                fail(h, t, e.what());
            }
            saw_kind = true;
        } else if (key == "max_program_length")
            header.max_program_length = static_cast<unsigned>(ulong_of(h, t, val));
        else if (key == "step_budget")
            header.step_budget = ulong_of(h, t, val);
        else if (key == "max_length")
            header.max_length = ulong_of(h, t, val);
        else if (key == "digest")
            digest = val;
        else
            fail(h, t, "unknown header key '" + key + "'");
    }
    if (!saw_kind) fail(h, 0, "header lacks kind=");
    if (header.kind != K) fail(h, 0, "expected a " + to_string(K) + " model, found " + to_string(header.kind));

    std::map<Bits, std::optional<unsigned>> entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0].text[0] == '#') continue;
        expect_arity(l, 2);
        const Bits x = bits_at(l, 0);
        std::optional<unsigned> v;
        if (l.tokens[1].text != "U") v = static_cast<unsigned>(ulong_of(l, 1, l.tokens[1].text));
        if (!entries.emplace(x, v).second) fail(l, 0, "duplicate entry for '" + bits_token(x) + "'");
    }
    ComplexityTable<K> table(std::move(header), std::move(entries));
    if (!digest.empty() && digest != sha256_hex(body_of(table)))
        throw ParseError("model digest does not match its entries", 1, 1);
    return table;
}

}  // namespace

std::string model_body(const PlainModel& m) { return body_of(m); }
std::string model_body(const PrefixModel& m) { return body_of(m); }
std::string model_digest(const PlainModel& m) { return sha256_hex(body_of(m)); }
std::string model_digest(const PrefixModel& m) { return sha256_hex(body_of(m)); }
std::string write_model(const PlainModel& m) { return write_table(m); }
std::string write_model(const PrefixModel& m) { return write_table(m); }
PlainModel read_plain_model(std::string_view text) { return read_table<ModelKind::Plain>(text); }
PrefixModel read_prefix_model(std::string_view text) { return read_table<ModelKind::Prefix>(text); }

ModelKind peek_model_kind(std::string_view text) {
    const auto lines = lex(text, true);
    if (!lines.empty())
        for (const auto& t : lines[0].tokens) {
            if (t.text == "kind=PLAIN") return ModelKind::Plain;
            if (t.text == "kind=PREFIX") return ModelKind::Prefix;
        }
    throw ParseError("model header lacks kind=PLAIN or kind=PREFIX", 1, 1);
}

std::string write_openset(const OpenSet& u) {
    std::string out;
    for (const auto& c : u.cylinders()) out += bits_token(c) + '\n';
    return out;
}

OpenSet read_openset(std::string_view text) {
    std::vector<Bits> cyl;
    for (const auto& l : lex(text)) {
        expect_arity(l, 1);
        cyl.push_back(bits_at(l, 0));
    }
    return OpenSet(cyl);
}

std::string write_basic_func(const BasicFunc& f) {
    std::string out = "depth " + std::to_string(f.depth()) + '\n';
    for (const auto& [x, v] : f.values()) out += bits_token(x) + ' ' + v.str() + '\n';
    return out;
}

BasicFunc read_basic_func(std::string_view text) {
    const auto lines = lex(text);
    const std::size_t depth = depth_header(lines);
    std::map<Bits, Rational> values;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_arity(l, 2);
        const Bits x = bits_at(l, 0);
        if (x.size() != depth) fail(l, 0, "prefix length differs from depth " + std::to_string(depth));
        const Rational v = rational_at(l, 1);
        if (v.sign() < 0) fail(l, 1, "values must be non-negative");
        if (!values.emplace(x, v).second) fail(l, 0, "duplicate cylinder '" + bits_token(x) + "'");
    }
    return BasicFunc(depth, std::move(values));
}

std::string write_basic_func_2d(const BasicFunc2D& f) {
    std::string out = "depth " + std::to_string(f.depth()) + '\n';
    for (const auto& [x, s] : f.slices())
        for (std::size_t j = 0; j < s.values().size(); ++j) {
            if (s.values()[j].is_zero()) continue;
            out += bits_token(x) + ' ' + s.breaks()[j].str() + ' ' + s.breaks()[j + 1].str() + ' ' +
                   s.values()[j].str() + '\n';
        }
    return out;
}

BasicFunc2D read_basic_func_2d(std::string_view text) {
    const auto lines = lex(text);
    const std::size_t depth = depth_header(lines);
    std::map<Bits, StepFn> slices;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_arity(l, 4);
        const Bits x = bits_at(l, 0);
        if (x.size() != depth) fail(l, 0, "prefix length differs from depth " + std::to_string(depth));
        const Rational lo = rational_at(l, 1);
        const Rational hi = rational_at(l, 2);
        const Rational v = rational_at(l, 3);
        if (lo.sign() < 0 || !(lo < hi)) fail(l, 1, "box needs 0 <= lo < hi");
        if (v.sign() < 0) fail(l, 3, "values must be non-negative");
        StepFn& s = slices[x];
        s = combine(FuncOp::Sum, s, StepFn::box(lo, hi, v));
    }
    return BasicFunc2D(depth, std::move(slices));
}

std::string write_openset_2d(const OpenSet2D& w) {
    std::string out;
    for (const auto& b : w.boxes())
        out += bits_token(b.prefix) + ' ' + b.interval.lo.str() + ' ' + b.interval.hi.str() + '\n';
    return out;
}

OpenSet2D read_openset_2d(std::string_view text) {
    std::vector<Box2D> boxes;
    for (const auto& l : lex(text)) {
        expect_arity(l, 3);
        const Rational lo = rational_at(l, 1);
        const Rational hi = rational_at(l, 2);
        if (lo.sign() < 0 || !(lo < hi)) fail(l, 1, "box needs 0 <= lo < hi");
        boxes.push_back({bits_at(l, 0), {lo, hi}});
    }
    return OpenSet2D(boxes);
}

SlowCoverTrace read_trace_csv(std::string_view text) {
    // Re-lex with commas as separators.
    std::string spaced(text);
    for (char& c : spaced)
        if (c == ',') c = ' ';
    const auto lines = lex(spaced);
    static const char* const kColumns[] = {"i",     "integral_added", "t",      "delta_t",
                                           "exceedance_measure", "i1_ok", "i2_lhs", "i2_rhs"};
    if (lines.empty()) throw ParseError("missing CSV header", 1, 1);
    expect_arity(lines[0], 8);
    for (std::size_t c = 0; c < 8; ++c)
        if (lines[0].tokens[c].text != kColumns[c])
            fail(lines[0], c, std::string("expected column '") + kColumns[c] + "'");
    SlowCoverTrace trace;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const Line& l = lines[r];
        expect_arity(l, 8);
        SlowCoverStep s;
        s.i = ulong_of(l, 0, l.tokens[0].text);
        s.integral_added = rational_at(l, 1);
        s.t = rational_at(l, 2);
        s.delta_t = rational_at(l, 3);
        s.exceedance_measure = rational_at(l, 4);
        const std::string& ok = l.tokens[5].text;
        if (ok != "true" && ok != "false") fail(l, 5, "expected true or false");
        s.i1_ok = ok == "true";
        s.i2_lhs = rational_at(l, 6);
        s.i2_rhs = rational_at(l, 7);
        trace.T = s.t;
        trace.steps.push_back(std::move(s));
    }
    return trace;
}

}  // namespace randlab
