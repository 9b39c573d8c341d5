#include "randlab/cantor.hpp"

#include <algorithm>

#include "randlab/errors.hpp"

namespace randlab {

bool is_bits(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

void require_bits(std::string_view s) {
    if (!is_bits(s)) throw InputError("not a bit string: '" + std::string(s) + "'");
}

bool is_prefix_of(std::string_view prefix, std::string_view s) {
    return prefix.size() <= s.size() && s.substr(0, prefix.size()) == prefix;
}

std::vector<Bits> all_strings(std::size_t n) {
    std::vector<Bits> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
        Bits s(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if (v >> (n - 1 - i) & 1U) s[i] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Bits> all_strings_up_to(std::size_t n) {
    std::vector<Bits> out;
    for (std::size_t len = 0; len <= n; ++len) {
        auto level = all_strings(len);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    return out;
}

Bits binary_of(unsigned long n) {
    if (n == 0) return "0";
    Bits s;
    for (; n != 0; n >>= 1) s.push_back((n & 1U) ? '1' : '0');
    std::reverse(s.begin(), s.end());
    return s;
}

// ---------------------------------------------------------------------------

LazyPoint::LazyPoint(Bits prefix, Bits cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    require_bits(prefix_);
    require_bits(cycle_);
    if (cycle_.empty()) throw InputError("lazy point needs a non-empty cycle");
}

char LazyPoint::bit(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return cycle_[(i - prefix_.size()) % cycle_.size()];
}

Bits LazyPoint::head(std::size_t n) const {
    Bits s(n, '0');
    for (std::size_t i = 0; i < n; ++i) s[i] = bit(i);
    return s;
}

bool LazyPoint::in(const Cylinder& c) const { return head(c.depth()) == c.prefix; }

std::vector<LazyPoint> LazyPoint::enumerate(std::size_t max_prefix, std::size_t max_cycle) {
    std::vector<LazyPoint> out;
    const auto prefixes = all_strings_up_to(max_prefix);
    for (std::size_t c = 1; c <= max_cycle; ++c)
        for (const auto& cyc : all_strings(c))
            for (const auto& p : prefixes) out.emplace_back(p, cyc);
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Bits> canonicalize(std::vector<Bits> prefixes) {
    for (const auto& p : prefixes) require_bits(p);
    std::sort(prefixes.begin(), prefixes.end());
    prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());

    // In lexicographic order every extension of x follows x contiguously, so
    // a stack both drops covered members and merges sibling pairs bottom-up.
    std::vector<Bits> out;
    for (auto& p : prefixes) {
        if (!out.empty() && is_prefix_of(out.back(), p)) continue;
        out.push_back(std::move(p));
        while (out.size() >= 2) {
            const Bits& hi = out[out.size() - 1];
            const Bits& lo = out[out.size() - 2];
            if (hi.empty() || hi.size() != lo.size() || hi.back() != '1' || lo.back() != '0' ||
                hi.compare(0, hi.size() - 1, lo, 0, lo.size() - 1) != 0)
                break;
            Bits parent = lo.substr(0, lo.size() - 1);
            out.pop_back();
            out.back() = std::move(parent);
        }
    }
    return out;
}

OpenSet::OpenSet(std::vector<Bits> prefixes) : cyls_(canonicalize(std::move(prefixes))) {}

OpenSet OpenSet::of(std::initializer_list<const char*> prefixes) {
    std::vector<Bits> v;
    for (const char* p : prefixes) v.emplace_back(p);
    return OpenSet(std::move(v));
}

Rational OpenSet::measure() const {
    Rational m;
    for (const auto& c : cyls_) m += Rational::pow2(-static_cast<long>(c.size()));
    return m;
}

std::size_t OpenSet::depth() const {
    std::size_t d = 0;
    for (const auto& c : cyls_) d = std::max(d, c.size());
    return d;
}

bool OpenSet::contains(const LazyPoint& p) const {
    return std::any_of(cyls_.begin(), cyls_.end(),
                       [&](const Bits& c) { return p.in(Cylinder{c}); });
}

bool OpenSet::contains(const Cylinder& c) const {
    // Maximal merging means a covered cylinder sits under a single member.
    return std::any_of(cyls_.begin(), cyls_.end(),
                       [&](const Bits& m) { return is_prefix_of(m, c.prefix); });
}

bool OpenSet::contains(const OpenSet& other) const {
    return std::all_of(other.cyls_.begin(), other.cyls_.end(),
                       [&](const Bits& c) { return contains(Cylinder{c}); });
}

OpenSet set_union(const OpenSet& a, const OpenSet& b) {
    std::vector<Bits> all = a.cylinders();
    all.insert(all.end(), b.cylinders().begin(), b.cylinders().end());
    return OpenSet(std::move(all));
}

OpenSet set_intersect(const OpenSet& a, const OpenSet& b) {
    std::vector<Bits> out;
    for (const auto& x : a.cylinders())
        for (const auto& y : b.cylinders()) {
            if (is_prefix_of(x, y))
                out.push_back(y);
            else if (is_prefix_of(y, x))
                out.push_back(x);
        }
    return OpenSet(std::move(out));
}

namespace {

void complement_rec(const std::vector<Bits>& members, const Bits& node, std::vector<Bits>& out) {
    bool touches = false;
    for (const auto& m : members) {
        if (is_prefix_of(m, node)) return;  // node covered
        if (is_prefix_of(node, m)) touches = true;
    }
    if (!touches) {
        out.push_back(node);
        return;
    }
    complement_rec(members, node + '0', out);
    complement_rec(members, node + '1', out);
}

}  // namespace

OpenSet set_complement(const OpenSet& a) {
    std::vector<Bits> out;
    complement_rec(a.cylinders(), Bits{}, out);
    return OpenSet(std::move(out));
}

OpenSet openset_ops(SetOp op, const OpenSet& a, const OpenSet& b) {
    return op == SetOp::Union ? set_union(a, b) : set_intersect(a, b);
}

}  // namespace randlab
