#include "randlab/block_cover.hpp"

#include <algorithm>

namespace randlab {

Rational EpsilonSchedule::level(std::size_t j) const {
    if (j == 0) return eps;
    if (rule == Rule::GeometricGap)
        return eps_prime - (eps_prime - eps) * Rational::pow2(-static_cast<long>(j));
    if (j > levels.size()) throw InputError("explicit epsilon schedule exhausted");
    return levels[j - 1];
}

std::size_t EpsilonSchedule::max_blocks() const {
    return rule == Rule::GeometricGap ? static_cast<std::size_t>(-1) : levels.size();
}

void EpsilonSchedule::validate() const {
    if (eps.sign() < 0) throw InputError("epsilon must be >= 0");
    if (!(eps < eps_prime)) throw InputError("epsilon' must exceed epsilon");
    if (rule == Rule::Explicit) {
        if (levels.empty()) throw InputError("explicit epsilon schedule is empty");
        Rational prev = eps;
        for (const auto& l : levels) {
            if (!(prev < l) || !(l < eps_prime))
                throw InputError("explicit schedule must satisfy eps < e_1 < e_2 < ... < eps'");
            prev = l;
        }
    }
}

namespace {

struct SetLattice {
    static OpenSet join(const OpenSet& a, const OpenSet& b) { return set_union(a, b); }
    static OpenSet meet(const OpenSet& a, const OpenSet& b) { return set_intersect(a, b); }
    static Rational size(const OpenSet& a) { return a.measure(); }
};

struct FuncLattice {
    static BasicFunc join(const BasicFunc& a, const BasicFunc& b) { return fmax(a, b); }
    static BasicFunc meet(const BasicFunc& a, const BasicFunc& b) { return fmin(a, b); }
    static Rational size(const BasicFunc& a) { return integrate(a); }
};

template <class T, class Lattice>
std::pair<T, BlockDecomposition<T>> build_blocks(const SeqSpec<T>& spec, const EpsilonSchedule& sched,
                                                  std::size_t block_cap, bool& stabilized) {
    sched.validate();
    const std::size_t L = spec.length();
    const std::size_t span = spec.tail().span();
    for (std::size_t i = 1; i <= L + span; ++i)
        if (Lattice::size(spec.at(i)) > sched.eps)
            throw InputError("item " + std::to_string(i) + " has size " +
                             Lattice::size(spec.at(i)).str() + " above epsilon " + sched.eps.str());

    T cover{};
    BlockDecomposition<T> dec;
    stabilized = false;
    const std::size_t cap = std::min(block_cap, sched.max_blocks());
    std::size_t s = 1;
    for (std::size_t j = 1; j <= cap; ++j) {
        const Rational level = sched.level(j);
        const Rational gap = level - sched.level(j - 1);
        std::size_t k = s;
        T block = spec.at(s);
        std::vector<Rational> history{Lattice::size(block)};
        std::size_t extensions = 0;
        for (;;) {
            // Indices past k up to one full tail period beyond the list cover
            // every distinct term that can still appear.
            const std::size_t hi = std::max(k, L) + span;
            const T base = Lattice::join(cover, block);
            std::size_t witness = 0;
            for (std::size_t i = k + 1; i <= hi; ++i)
                if (Lattice::size(Lattice::join(base, spec.at(i))) > level) {
                    witness = i;
                    break;
                }
            if (witness == 0) break;
            for (std::size_t n = k + 1; n <= witness; ++n) block = Lattice::meet(block, spec.at(n));
            k = witness;
            ++extensions;
            const Rational now = Lattice::size(block);
            if (!(history.back() - now > gap))
                throw InternalError("block extension did not shrink the block by more than the level gap");
            history.push_back(now);
        }
        cover = Lattice::join(cover, block);
        if (Lattice::size(cover) > level) throw InternalError("cover exceeded its level after closing a block");
        dec.starts.push_back(s);
        dec.cut_points.push_back(k);
        dec.blocks.push_back(std::move(block));
        dec.extensions.push_back(extensions);
        dec.size_history.push_back(std::move(history));
        if (s > L) {
            stabilized = true;
            break;
        }
        s = k + 1;
    }
    if (Lattice::size(cover) > sched.eps_prime) throw InternalError("cover exceeded epsilon'");
    return {std::move(cover), std::move(dec)};
}

}  // namespace

ConidisResult conidis_cover(const SetSeq& spec, const EpsilonSchedule& sched, std::size_t block_cap) {
    ConidisResult r;
    auto [cover, dec] = build_blocks<OpenSet, SetLattice>(spec, sched, block_cap, r.stabilized);
    r.cover = std::move(cover);
    r.blocks = std::move(dec);
    return r;
}

FatouResult fatou_bound(const FuncSeq& spec, const EpsilonSchedule& sched, std::size_t block_cap) {
    FatouResult r;
    auto [phi, dec] = build_blocks<BasicFunc, FuncLattice>(spec, sched, block_cap, r.stabilized);
    r.phi = std::move(phi);
    r.blocks = std::move(dec);
    return r;
}

}  // namespace randlab
