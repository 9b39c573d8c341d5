#include "randlab/liminf.hpp"

#include <algorithm>

namespace randlab {

OpenSet liminf_sets(const SetSeq& spec) {
    if (spec.tail().kind == Tail::Kind::Zero) return OpenSet();
    const std::size_t L = spec.length();
    const std::size_t p = spec.tail().span();

    OpenSet cycle_core = OpenSet::whole();
    for (const auto& u : spec.tail_members()) cycle_core = set_intersect(cycle_core, u);

    // ⋃_{N=1..L+p} [ ⋂_{n=N..L} U_n ∩ cycle_core ]; the N = L+1 term alone
    // already equals cycle_core, the union form is kept as the literal oracle.
    OpenSet result;
    for (std::size_t N = 1; N <= L + p; ++N) {
        OpenSet block = cycle_core;
        for (std::size_t n = N; n <= L; ++n) block = set_intersect(block, spec.at(n));
        result = set_union(result, block);
    }
    return result;
}

ExtRational liminf_pointwise(const FuncSeq& spec, const LazyPoint& p) {
    if (spec.tail().kind == Tail::Kind::Zero) return ExtRational::finite(Rational());
    std::optional<Rational> best;
    for (const auto& f : spec.tail_members()) {
        Rational v = f.at(p);
        if (!best || v < *best) best = std::move(v);
    }
    return ExtRational::finite(*best);
}

}  // namespace randlab
