#include "randlab/slow_cover.hpp"

#include <sstream>

#include "randlab/errors.hpp"

namespace randlab {

bool SlowCoverTrace::invariants_hold() const {
    Rational prev;
    for (const auto& s : steps) {
        if (!s.i1_ok || s.i2_lhs > s.i2_rhs || s.t < prev) return false;
        prev = s.t;
    }
    return true;
}

namespace {

// One run of the threshold iteration, shared by the 1-D and 2-D versions.
// Returns the final excess E_L.
template <class F>
F iterate(const std::vector<F>& fs, const Rational& eps, SlowCoverTrace& trace) {
    trace.eps = eps;
    F excess{};
    Rational t;
    Rational added;
    for (std::size_t i = 1; i <= fs.size(); ++i) {
        const F& f = fs[i - 1];
        const Rational in = integrate(f);
        added += in;
        const F d = combine(FuncOp::Sum, excess, f);

        std::set<Rational> candidates = d.range();
        candidates.insert(Rational());
        Rational delta;
        Rational below;
        bool found = false;
        for (const auto& c : candidates) {
            if (exceedance_measure(d, c) <= eps) {
                delta = c;
                found = true;
                break;
            }
            below = c;
        }
        if (!found) throw InternalError("no threshold candidate brings the exceedance below epsilon");
        if (delta.sign() > 0 && exceedance_measure(d, (below + delta) / Rational(2)) <= eps)
            throw InternalError("threshold is not minimal");

        t += delta;
        excess = excess_over(d, delta);

        SlowCoverStep s;
        s.i = i;
        s.integral_added = in;
        s.t = t;
        s.delta_t = delta;
        s.exceedance_measure = exceedance_measure(excess, Rational());
        s.i1_ok = s.exceedance_measure <= eps;
        s.i2_lhs = eps * t + integrate(excess);
        s.i2_rhs = added;
        if (!s.i1_ok) throw InternalError("I1 failed at step " + std::to_string(i));
        if (s.i2_lhs > s.i2_rhs) throw InternalError("I2 failed at step " + std::to_string(i));
        trace.steps.push_back(std::move(s));
    }
    trace.T = t;
    return excess;
}

constexpr std::size_t kCoverageDepthCap = 20;

}  // namespace

SlowCoverResult slow_cover(const FuncSeq& fs, const Rational& eps) {
    fs.require_zero_tail("slow_cover");
    if (eps.sign() <= 0) throw InputError("epsilon must be positive");
    SlowCoverResult r;
    const BasicFunc excess = iterate(fs.items(), eps, r.trace);
    std::size_t depth = 0;
    for (const auto& f : fs.items()) depth = std::max(depth, f.depth());
    r.T = r.trace.T;
    r.S = fsum(BasicFunc::constant(r.T, depth), excess.refined(std::max(depth, excess.depth())));
    r.W = exceedance_set(excess, Rational());
    if (r.W.measure() > eps) throw InternalError("cover exceeds epsilon");
    return r;
}

CoverageReport slow_cover_coverage_check(const FuncSeq& fs, const Rational& eps,
                                         const SlowCoverResult& result) {
    (void)eps;
    std::size_t depth = 0;
    for (const auto& f : fs.items()) depth = std::max(depth, f.depth());
    if (depth > kCoverageDepthCap) throw ResourceError("coverage check depth above cap");
    const std::size_t L = fs.length();
    CoverageReport rep;
    for (const auto& cyl : all_strings(depth)) {
        ++rep.cells_checked;
        Rational tail;
        for (std::size_t i = L; i >= 1; --i) {
            tail += fs.items()[i - 1].at(cyl);
            const Rational prev_t = i == 1 ? Rational() : result.trace.steps[i - 2].t;
            if (tail > result.T - prev_t) {
                ++rep.premises_met;
                if (!result.W.contains(Cylinder{cyl})) rep.counterexamples.push_back({cyl, Rational(), i});
            }
        }
    }
    return rep;
}

SlowCover2DResult slow_cover_2d(const Func2DSeq& gs, const Rational& eps, const SeriesSpec& rho) {
    gs.require_zero_tail("slow_cover_2d");
    if (eps.sign() <= 0) throw InputError("epsilon must be positive");
    SlowCover2DResult r;
    r.excess = iterate(gs.items(), eps, r.trace);
    r.T = r.trace.T;
    for (const auto& s : r.trace.steps) r.total_integral += s.integral_added;
    r.threshold_bound_ok = r.T * eps <= r.total_integral;
    r.W = exceedance_set(r.excess, Rational());
    if (r.W.measure() > eps) throw InternalError("cover exceeds epsilon");

    // Corner grid of the common refinement of every g_i and W.
    std::size_t depth = r.W.depth();
    std::set<Rational> corners = r.W.breakpoints();
    corners.insert(Rational());
    for (const auto& g : gs.items()) {
        depth = std::max(depth, g.depth());
        const auto b = g.breakpoints();
        corners.insert(b.begin(), b.end());
    }
    if (depth > kCoverageDepthCap) throw ResourceError("coverage check depth above cap");

    const std::size_t L = gs.length();
    // Δt_j <= ρ(j) for every j >= i (beyond the list Δt_j = 0).
    std::vector<bool> slow_from(L + 2, true);
    for (std::size_t i = L; i >= 1; --i)
        slow_from[i] = slow_from[i + 1] && r.trace.steps[i - 1].delta_t <= rho.term(i);

    for (const auto& cyl : all_strings(depth))
        for (const auto& u : corners) {
            ++r.coverage.cells_checked;
            Rational tail;
            for (std::size_t i = L; i >= 1; --i) {
                tail += gs.items()[i - 1].at(cyl, u);
                if (slow_from[i] && tail > rho.tail_sum(i)) {
                    ++r.coverage.premises_met;
                    if (!r.W.contains(cyl, u)) r.coverage.counterexamples.push_back({cyl, u, i});
                }
            }
        }
    return r;
}

std::string trace_csv(const SlowCoverTrace& trace) {
    std::ostringstream os;
    os << "i,integral_added,t,delta_t,exceedance_measure,i1_ok,i2_lhs,i2_rhs\n";
    for (const auto& s : trace.steps)
        os << s.i << ',' << s.integral_added.str() << ',' << s.t.str() << ',' << s.delta_t.str() << ','
           << s.exceedance_measure.str() << ',' << (s.i1_ok ? "true" : "false") << ',' << s.i2_lhs.str()
           << ',' << s.i2_rhs.str() << '\n';
    return os.str();
}

}  // namespace randlab
