#include "randlab/basic_func.hpp"

#include <algorithm>

#include "randlab/errors.hpp"

namespace randlab {

BasicFunc::BasicFunc(std::size_t depth, std::map<Bits, Rational> values) : depth_(depth) {
    for (auto& [key, v] : values) {
        if (key.size() != depth) throw InputError("basic function key '" + key + "' has wrong depth");
        require_bits(key);
        if (v.sign() < 0) throw InputError("basic function value must be >= 0");
        if (!v.is_zero()) values_.emplace(key, std::move(v));
    }
}

BasicFunc BasicFunc::constant(const Rational& c, std::size_t depth) {
    std::map<Bits, Rational> vals;
    if (!c.is_zero())
        for (auto& s : all_strings(depth)) vals.emplace(std::move(s), c);
    return BasicFunc(depth, std::move(vals));
}

BasicFunc BasicFunc::indicator(const Bits& prefix, const Rational& c) {
    return BasicFunc(prefix.size(), {{prefix, c}});
}

Rational BasicFunc::at(std::string_view bits) const {
    if (bits.size() < depth_) throw InputError("point prefix shorter than function depth");
    auto it = values_.find(Bits(bits.substr(0, depth_)));
    return it == values_.end() ? Rational() : it->second;
}

BasicFunc BasicFunc::refined(std::size_t depth) const {
    if (depth < depth_) throw InputError("cannot refine to a smaller depth");
    if (depth == depth_) return *this;
    BasicFunc out(depth);
    const auto tails = all_strings(depth - depth_);
    for (const auto& [key, v] : values_)
        for (const auto& t : tails) out.values_.emplace_hint(out.values_.end(), key + t, v);
    return out;
}

std::set<Rational> BasicFunc::range() const {
    std::set<Rational> r;
    for (const auto& [key, v] : values_) r.insert(v);
    // 2^depth might not fit in a machine word, so compare measures instead.
    if (Rational(static_cast<long>(values_.size())) * Rational::pow2(-static_cast<long>(depth_)) <
        Rational(1))
        r.insert(Rational());
    return r;
}

BasicFunc combine(FuncOp op, const BasicFunc& f, const BasicFunc& g) {
    const std::size_t d = std::max(f.depth(), g.depth());
    const BasicFunc a = f.refined(d);
    const BasicFunc b = g.refined(d);
    std::map<Bits, Rational> out;
    const auto& av = a.values();
    const auto& bv = b.values();
    switch (op) {
        case FuncOp::Min:
            for (const auto& [key, v] : av)
                if (auto it = bv.find(key); it != bv.end()) out.emplace(key, min(v, it->second));
            break;
        case FuncOp::Max:
        case FuncOp::Sum:
            out = av;
            for (const auto& [key, v] : bv) {
                auto [it, inserted] = out.emplace(key, v);
                if (!inserted) it->second = op == FuncOp::Max ? max(it->second, v) : it->second + v;
            }
            break;
    }
    return BasicFunc(d, std::move(out));
}

BasicFunc scale(const BasicFunc& f, const Rational& c) {
    if (c.sign() < 0) throw InputError("scale factor must be >= 0");
    std::map<Bits, Rational> out;
    if (!c.is_zero())
        for (const auto& [key, v] : f.values()) out.emplace(key, v * c);
    return BasicFunc(f.depth(), std::move(out));
}

BasicFunc excess_over(const BasicFunc& f, const Rational& t) {
    std::map<Bits, Rational> out;
    for (const auto& [key, v] : f.values())
        if (v > t) out.emplace(key, v - t);
    return BasicFunc(f.depth(), std::move(out));
}

Rational integrate(const BasicFunc& f) {
    Rational s;
    for (const auto& [key, v] : f.values()) s += v;
    return s * Rational::pow2(-static_cast<long>(f.depth()));
}

OpenSet exceedance_set(const BasicFunc& f, const Rational& t) {
    if (t.sign() < 0) throw InputError("exceedance threshold must be >= 0");
    std::vector<Bits> cyls;
    for (const auto& [key, v] : f.values())
        if (v > t) cyls.push_back(key);
    return OpenSet(std::move(cyls));
}

Rational exceedance_measure(const BasicFunc& f, const Rational& t) {
    if (t.sign() < 0) throw InputError("exceedance threshold must be >= 0");
    long n = 0;
    for (const auto& [key, v] : f.values())
        if (v > t) ++n;
    return Rational(n) * Rational::pow2(-static_cast<long>(f.depth()));
}

}  // namespace randlab
