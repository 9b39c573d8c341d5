#include "randlab/q_pipeline.hpp"

#include "randlab/errors.hpp"

namespace randlab {

BasicFunc2D lift_to_graph(const BasicFunc& f, const Rational& a) {
    if (a.sign() <= 0) throw InputError("graph height must be positive");
    std::map<Bits, StepFn> slices;
    for (const auto& [x, v] : f.values()) slices.emplace(x, StepFn::box(Rational(), v / a, a));
    return BasicFunc2D(f.depth(), std::move(slices));
}

QResult extract_q(const OpenSet2D& W) {
    const std::size_t depth = W.depth();
    std::map<Bits, Rational> q;
    for (const auto& [x, iv] : W.slices()) {
        if (iv.empty() || iv.front().lo.sign() != 0) continue;
        // Canonical slices never touch, so the first interval is the whole
        // run of coverage from 0.
        const Rational reach = iv.front().hi;
        if (x.size() == depth) {
            q.emplace(x, reach);
            continue;
        }
        for (const auto& tail : all_strings(depth - x.size())) q.emplace(x + tail, reach);
    }
    QResult r;
    r.Q = BasicFunc(depth, std::move(q));
    r.integral_q = integrate(r.Q);
    r.measure_w = W.measure();
    return r;
}

bool QPipelineResult::passed() const {
    if (status != Status::Admissible) return false;
    if (!run || !run->trace.invariants_hold() || !run->threshold_bound_ok || !run->coverage.passed())
        return false;
    if (!q || !q->integral_ok()) return false;
    for (const auto& d : domination)
        if (!d.ok) return false;
    return true;
}

QPipelineResult q_pipeline(const FuncSeq& fs, const SeriesSpec& a, const SeriesSpec& rho, long k_min,
                           long k_max, const std::vector<LazyPoint>& test_points, std::size_t horizon) {
    fs.require_zero_tail("q_pipeline");
    if (k_min > k_max) throw InputError("empty k range");
    const std::size_t L = fs.length();
    for (std::size_t i = 1; i <= L; ++i)
        if (a.term(i).sign() <= 0) throw InputError("a(" + std::to_string(i) + ") must be positive");
    const TailsVerdict v = tails_bounded(rho, a, Rational(1), horizon);
    if (v.kind != TailsVerdict::Kind::BoundedWitnessed)
        throw SpecificationError("rho tails are not bounded by a tails: " + v.str());

    std::vector<BasicFunc2D> lifted;
    for (std::size_t i = 1; i <= L; ++i) lifted.push_back(lift_to_graph(fs.at(i), a.term(i)));
    const Func2DSeq gs(std::move(lifted), Tail::zero());

    QPipelineResult out;
    for (long k = k_min; k <= k_max; ++k) {
        const Rational eps = Rational::pow2(k);
        SlowCover2DResult run = slow_cover_2d(gs, eps, rho);
        EpsilonDiagnostic d;
        d.k = k;
        d.eps = eps;
        d.T = run.T;
        d.admissible = true;
        d.max_ratio = ExtRational::finite(Rational());
        for (std::size_t i = 1; i <= L; ++i) {
            const Rational& dt = run.trace.steps[i - 1].delta_t;
            const Rational r = rho.term(i);
            if (dt > r) d.admissible = false;
            ExtRational ratio;
            if (r.sign() > 0)
                ratio = ExtRational::finite(dt / r);
            else
                ratio = dt.sign() > 0 ? ExtRational::infinity() : ExtRational::finite(Rational());
            if (!(ratio <= d.max_ratio)) d.max_ratio = ratio;
        }
        d.threshold_bound_ok = run.threshold_bound_ok;
        d.coverage_ok = run.coverage.passed();
        d.measure_w = run.W.measure();
        out.grid.push_back(d);
        if (d.admissible && !out.selected_k) {
            out.selected_k = k;
            out.run = std::move(run);
        }
    }
    if (!out.selected_k) return out;
    out.status = QPipelineResult::Status::Admissible;
    out.q = extract_q(out.run->W);

    // certified[i]: Σ_{j=i..L} Δt_j < Σ_{j=i..L} a(j)
    std::vector<bool> certified(L + 1, false);
    {
        Rational dt_sum, a_sum;
        for (std::size_t i = L; i >= 1; --i) {
            dt_sum += out.run->trace.steps[i - 1].delta_t;
            a_sum += a.term(i);
            certified[i] = dt_sum < a_sum;
        }
    }
    for (const auto& p : test_points) {
        DominationRow row{p, out.q->Q.at(p), Rational(), Rational(), false};
        Rational run_min;
        bool first = true;
        for (std::size_t i = L; i >= 1; --i) {
            const Rational ratio = fs.at(i).at(p) / a.term(i);
            if (i == L) row.horizon_ratio = ratio;
            run_min = first ? ratio : min(run_min, ratio);
            first = false;
            if (certified[i]) row.certified = max(row.certified, run_min);
        }
        row.ok = row.q >= row.certified;
        out.domination.push_back(std::move(row));
    }
    return out;
}

}  // namespace randlab
