#include "randlab/plane.hpp"

#include <algorithm>

#include "randlab/errors.hpp"

namespace randlab {

std::vector<Interval> merge_intervals(std::vector<Interval> iv) {
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> out;
    for (auto& i : iv) {
        if (!out.empty() && i.lo <= out.back().hi)
            out.back().hi = max(out.back().hi, i.hi);
        else
            out.push_back(std::move(i));
    }
    return out;
}

// ---------------------------------------------------------------------------
// StepFn

StepFn::StepFn(std::vector<Rational> breaks, std::vector<Rational> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
    if (breaks_.empty() || !breaks_.front().is_zero())
        throw InputError("step function breakpoints must start at 0");
    if (breaks_.size() != values_.size() + 1)
        throw InputError("step function needs exactly one value per piece");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i - 1] < breaks_[i]))
            throw InputError("step function breakpoints must increase strictly");
    for (const auto& v : values_)
        if (v.sign() < 0) throw InputError("step function values must be >= 0");
    normalize();
}

StepFn StepFn::box(const Rational& lo, const Rational& hi, const Rational& c) {
    if (lo.sign() < 0 || !(lo < hi)) throw InputError("box interval must satisfy 0 <= lo < hi");
    if (lo.is_zero()) return StepFn({Rational(), hi}, {c});
    return StepFn({Rational(), lo, hi}, {Rational(), c});
}

void StepFn::normalize() {
    std::vector<Rational> b{breaks_.front()};
    std::vector<Rational> v;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!v.empty() && v.back() == values_[j])
            b.back() = breaks_[j + 1];
        else {
            v.push_back(values_[j]);
            b.push_back(breaks_[j + 1]);
        }
    }
    while (!v.empty() && v.back().is_zero()) {
        v.pop_back();
        b.pop_back();
    }
    breaks_ = std::move(b);
    values_ = std::move(v);
}

Rational StepFn::at(const Rational& r) const {
    if (r.sign() < 0 || !(r < extent())) return Rational();
    // First breakpoint strictly greater than r closes the piece holding r.
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), r);
    return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

Rational StepFn::integral() const {
    Rational s;
    for (std::size_t j = 0; j < values_.size(); ++j) s += values_[j] * (breaks_[j + 1] - breaks_[j]);
    return s;
}

Rational StepFn::exceed_length(const Rational& t) const {
    if (t.sign() < 0) throw InputError("exceedance threshold must be >= 0");
    Rational s;
    for (std::size_t j = 0; j < values_.size(); ++j)
        if (values_[j] > t) s += breaks_[j + 1] - breaks_[j];
    return s;
}

std::vector<Interval> StepFn::exceed_intervals(const Rational& t) const {
    if (t.sign() < 0) throw InputError("exceedance threshold must be >= 0");
    std::vector<Interval> out;
    for (std::size_t j = 0; j < values_.size(); ++j)
        if (values_[j] > t) out.push_back({breaks_[j], breaks_[j + 1]});
    return merge_intervals(std::move(out));
}

std::set<Rational> StepFn::range() const {
    std::set<Rational> r(values_.begin(), values_.end());
    r.insert(Rational());  // the unbounded part beyond the support
    return r;
}

StepFn combine(FuncOp op, const StepFn& a, const StepFn& b) {
    std::set<Rational> cuts(a.breaks_.begin(), a.breaks_.end());
    cuts.insert(b.breaks_.begin(), b.breaks_.end());
    std::vector<Rational> breaks(cuts.begin(), cuts.end());
    std::vector<Rational> values;
    values.reserve(breaks.size());
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        const Rational x = a.at(breaks[j]);
        const Rational y = b.at(breaks[j]);
        switch (op) {
            case FuncOp::Min: values.push_back(min(x, y)); break;
            case FuncOp::Max: values.push_back(max(x, y)); break;
            case FuncOp::Sum: values.push_back(x + y); break;
        }
    }
    return StepFn(std::move(breaks), std::move(values));
}

StepFn scale(const StepFn& f, const Rational& c) {
    if (c.sign() < 0) throw InputError("scale factor must be >= 0");
    std::vector<Rational> v;
    for (const auto& x : f.values_) v.push_back(x * c);
    return StepFn(f.breaks_, std::move(v));
}

StepFn excess_over(const StepFn& f, const Rational& t) {
    std::vector<Rational> v;
    for (const auto& x : f.values_) v.push_back(x > t ? x - t : Rational());
    return StepFn(f.breaks_, std::move(v));
}

// ---------------------------------------------------------------------------
// BasicFunc2D

BasicFunc2D::BasicFunc2D(std::size_t depth, std::map<Bits, StepFn> slices) : depth_(depth) {
    for (auto& [key, s] : slices) {
        if (key.size() != depth) throw InputError("2-D basic function key '" + key + "' has wrong depth");
        require_bits(key);
        if (!s.is_zero()) slices_.emplace(key, std::move(s));
    }
}

const StepFn* BasicFunc2D::slice(std::string_view bits) const {
    if (bits.size() < depth_) throw InputError("point prefix shorter than function depth");
    auto it = slices_.find(Bits(bits.substr(0, depth_)));
    return it == slices_.end() ? nullptr : &it->second;
}

Rational BasicFunc2D::at(std::string_view bits, const Rational& r) const {
    const StepFn* s = slice(bits);
    return s ? s->at(r) : Rational();
}

BasicFunc2D BasicFunc2D::refined(std::size_t depth) const {
    if (depth < depth_) throw InputError("cannot refine to a smaller depth");
    if (depth == depth_) return *this;
    std::map<Bits, StepFn> out;
    const auto tails = all_strings(depth - depth_);
    for (const auto& [key, s] : slices_)
        for (const auto& t : tails) out.emplace_hint(out.end(), key + t, s);
    return BasicFunc2D(depth, std::move(out));
}

std::set<Rational> BasicFunc2D::range() const {
    std::set<Rational> r{Rational()};
    for (const auto& [key, s] : slices_) {
        auto v = s.range();
        r.insert(v.begin(), v.end());
    }
    return r;
}

std::set<Rational> BasicFunc2D::breakpoints() const {
    std::set<Rational> r{Rational()};
    for (const auto& [key, s] : slices_) r.insert(s.breaks().begin(), s.breaks().end());
    return r;
}

BasicFunc2D combine(FuncOp op, const BasicFunc2D& f, const BasicFunc2D& g) {
    const std::size_t d = std::max(f.depth(), g.depth());
    const BasicFunc2D a = f.refined(d);
    const BasicFunc2D b = g.refined(d);
    const StepFn zero;
    std::set<Bits> keys;
    for (const auto& [k, s] : a.slices()) keys.insert(k);
    for (const auto& [k, s] : b.slices()) keys.insert(k);
    std::map<Bits, StepFn> out;
    for (const auto& k : keys) {
        const StepFn* x = a.slice(k);
        const StepFn* y = b.slice(k);
        out.emplace(k, combine(op, x ? *x : zero, y ? *y : zero));
    }
    return BasicFunc2D(d, std::move(out));
}

BasicFunc2D scale(const BasicFunc2D& f, const Rational& c) {
    std::map<Bits, StepFn> out;
    for (const auto& [k, s] : f.slices()) out.emplace(k, scale(s, c));
    return BasicFunc2D(f.depth(), std::move(out));
}

BasicFunc2D excess_over(const BasicFunc2D& f, const Rational& t) {
    std::map<Bits, StepFn> out;
    for (const auto& [k, s] : f.slices()) out.emplace(k, excess_over(s, t));
    return BasicFunc2D(f.depth(), std::move(out));
}

Rational integrate(const BasicFunc2D& f) {
    Rational s;
    for (const auto& [k, slice] : f.slices()) s += slice.integral();
    return s * Rational::pow2(-static_cast<long>(f.depth()));
}

Rational exceedance_measure(const BasicFunc2D& f, const Rational& t) {
    Rational s;
    for (const auto& [k, slice] : f.slices()) s += slice.exceed_length(t);
    return s * Rational::pow2(-static_cast<long>(f.depth()));
}

// ---------------------------------------------------------------------------
// OpenSet2D

OpenSet2D::OpenSet2D(const std::vector<Box2D>& boxes) {
    std::size_t d = 0;
    for (const auto& b : boxes) {
        require_bits(b.prefix);
        if (b.interval.lo.sign() < 0 || !(b.interval.lo < b.interval.hi))
            throw InputError("box interval must satisfy 0 <= lo < hi");
        d = std::max(d, b.prefix.size());
    }
    // Refine to the common depth, merge per cylinder, then coarsen siblings
    // with identical slices level by level.
    std::map<Bits, std::vector<Interval>> fine;
    for (const auto& b : boxes)
        for (const auto& t : all_strings(d - b.prefix.size())) fine[b.prefix + t].push_back(b.interval);
    for (auto& [k, iv] : fine) iv = merge_intervals(std::move(iv));

    for (std::size_t level = d; level > 0; --level) {
        std::vector<Bits> zeros;
        for (const auto& [k, iv] : fine)
            if (k.size() == level && k.back() == '0') zeros.push_back(k);
        for (const auto& k0 : zeros) {
            Bits k1 = k0;
            k1.back() = '1';
            auto i0 = fine.find(k0);
            auto i1 = fine.find(k1);
            if (i1 == fine.end() || i0->second != i1->second) continue;
            auto iv = std::move(i0->second);
            fine.erase(i0);
            fine.erase(i1);
            fine.emplace(k0.substr(0, level - 1), std::move(iv));
        }
    }
    slices_ = std::move(fine);
}

std::vector<Box2D> OpenSet2D::boxes() const {
    std::vector<Box2D> out;
    for (const auto& [k, iv] : slices_)
        for (const auto& i : iv) out.push_back({k, i});
    return out;
}

Rational OpenSet2D::measure() const {
    Rational s;
    for (const auto& [k, iv] : slices_) {
        Rational len;
        for (const auto& i : iv) len += i.length();
        s += len * Rational::pow2(-static_cast<long>(k.size()));
    }
    return s;
}

std::size_t OpenSet2D::depth() const {
    std::size_t d = 0;
    for (const auto& [k, iv] : slices_) d = std::max(d, k.size());
    return d;
}

std::vector<Interval> OpenSet2D::slice_at(std::string_view bits) const {
    for (const auto& [k, iv] : slices_)
        if (is_prefix_of(k, bits)) return iv;
    return {};
}

bool OpenSet2D::contains(std::string_view bits, const Rational& r) const {
    const auto iv = slice_at(bits);
    return std::any_of(iv.begin(), iv.end(), [&](const Interval& i) { return i.contains(r); });
}

std::set<Rational> OpenSet2D::breakpoints() const {
    std::set<Rational> r;
    for (const auto& [k, iv] : slices_)
        for (const auto& i : iv) {
            r.insert(i.lo);
            r.insert(i.hi);
        }
    return r;
}

OpenSet2D set_union(const OpenSet2D& a, const OpenSet2D& b) {
    auto boxes = a.boxes();
    auto more = b.boxes();
    boxes.insert(boxes.end(), more.begin(), more.end());
    return OpenSet2D(boxes);
}

OpenSet2D exceedance_set(const BasicFunc2D& f, const Rational& t) {
    std::vector<Box2D> boxes;
    for (const auto& [k, s] : f.slices())
        for (auto& i : s.exceed_intervals(t)) boxes.push_back({k, std::move(i)});
    return OpenSet2D(boxes);
}

}  // namespace randlab
