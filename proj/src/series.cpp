#include "randlab/series.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "randlab/errors.hpp"

namespace randlab {

namespace {

Rational rpow(const Rational& base, std::size_t e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

Rational ulong_r(std::size_t n) { return Rational(static_cast<long>(n)); }

void check_form(const TailForm& f) {
    switch (f.kind) {
        case TailForm::Kind::Zero: break;
        case TailForm::Kind::Geometric:
            if (f.first.sign() < 0 || f.ratio.sign() < 0 || !(f.ratio < Rational(1)))
                throw SpecificationError("geometric tail needs first >= 0 and 0 <= ratio < 1");
            break;
        case TailForm::Kind::Telescoping:
            if (f.scale.sign() < 0) throw SpecificationError("telescoping tail needs scale >= 0");
            break;
    }
}

// First index from which the closed form's tail is identically zero.
std::optional<std::size_t> zero_from(const TailForm& f) {
    switch (f.kind) {
        case TailForm::Kind::Zero: return 1;
        case TailForm::Kind::Geometric:
            if (f.first.is_zero()) return 1;
            if (f.ratio.is_zero()) return 2;
            return std::nullopt;
        case TailForm::Kind::Telescoping:
            if (f.scale.is_zero()) return 1;
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

Rational TailForm::term(std::size_t i) const {
    if (i == 0) throw InputError("series indices start at 1");
    switch (kind) {
        case Kind::Zero: return Rational();
        case Kind::Geometric: return first * rpow(ratio, i - 1);
        case Kind::Telescoping: return scale / (ulong_r(i) * ulong_r(i + 1));
    }
    return Rational();
}

Rational TailForm::tail_from(std::size_t N) const {
    if (N == 0) throw InputError("series indices start at 1");
    switch (kind) {
        case Kind::Zero: return Rational();
        case Kind::Geometric: return first * rpow(ratio, N - 1) / (Rational(1) - ratio);
        case Kind::Telescoping: return scale / ulong_r(N);
    }
    return Rational();
}

SeriesSpec::SeriesSpec(std::vector<Rational> head, TailForm tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
    for (const auto& a : head_)
        if (a.sign() < 0) throw SpecificationError("series terms must be non-negative");
    check_form(tail_);
}

SeriesSpec SeriesSpec::geometric(Rational first, Rational ratio, std::size_t head_len) {
    TailForm f = TailForm::geometric(std::move(first), std::move(ratio));
    check_form(f);
    std::vector<Rational> head;
    for (std::size_t i = 1; i <= head_len; ++i) head.push_back(f.term(i));
    return {std::move(head), std::move(f)};
}

SeriesSpec SeriesSpec::telescoping(Rational scale, std::size_t head_len) {
    TailForm f = TailForm::telescoping(std::move(scale));
    check_form(f);
    std::vector<Rational> head;
    for (std::size_t i = 1; i <= head_len; ++i) head.push_back(f.term(i));
    return {std::move(head), std::move(f)};
}

Rational SeriesSpec::term(std::size_t i) const {
    if (i == 0) throw InputError("series indices start at 1");
    return i <= head_.size() ? head_[i - 1] : tail_.term(i);
}

Rational SeriesSpec::tail_sum(std::size_t N) const {
    if (N == 0) throw InputError("series indices start at 1");
    const std::size_t L = head_.size();
    if (N > L) return tail_.tail_from(N);
    Rational s = tail_.tail_from(L + 1);
    for (std::size_t i = N; i <= L; ++i) s += head_[i - 1];
    return s;
}

// ---------------------------------------------------------------------------

std::string TailsVerdict::str() const {
    switch (kind) {
        case Kind::BoundedWitnessed: return "BOUNDED_WITNESSED";
        case Kind::Violated: return "VIOLATED(" + std::to_string(n) + ")";
        case Kind::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

TailsVerdict tails_bounded(const SeriesSpec& a, const SeriesSpec& b, const Rational& c,
                           std::size_t horizon) {
    if (c.sign() <= 0) throw InputError("tails comparison constant must be positive");
    const auto holds = [&](std::size_t N) { return a.tail_sum(N) <= c * b.tail_sum(N); };
    const auto violated = [](std::size_t N, std::string note) {
        return TailsVerdict{TailsVerdict::Kind::Violated, N, std::move(note)};
    };

    for (std::size_t N = 1; N <= horizon; ++N)
        if (!holds(N)) return violated(N, "within horizon");

    // Past M both tails follow their closed forms.
    const std::size_t M = std::max({horizon + 1, a.head().size() + 1, b.head().size() + 1});
    for (std::size_t N = horizon + 1; N < M; ++N)
        if (!holds(N)) return violated(N, "explicit head beyond horizon");

    const TailForm& fa = a.tail();
    const TailForm& fb = b.tail();
    const auto za = zero_from(fa);
    const auto zb = zero_from(fb);
    using K = TailForm::Kind;

    // From N0 on the ratio A(N)/B(N) is non-increasing (or A vanishes), so
    // checking every N in [M, N0] settles all larger N.
    std::optional<std::size_t> settle;
    if (za) {
        settle = std::max(M, *za);
    } else if (zb) {
        settle = std::nullopt;  // A stays positive, B vanishes
    } else if (fa.kind == K::Geometric && fb.kind == K::Geometric) {
        if (fa.ratio <= fb.ratio) settle = M;
    } else if (fa.kind == K::Geometric && fb.kind == K::Telescoping) {
        // ratio ∝ N r^{N-1}, non-increasing once N >= r / (1 - r)
        const Rational bound = fa.ratio / (Rational(1) - fa.ratio);
        std::size_t n0 = 1;
        while (ulong_r(n0) < bound) ++n0;
        settle = std::max(M, n0);
    } else if (fa.kind == K::Telescoping && fb.kind == K::Telescoping) {
        settle = M;
    }

    if (settle) {
        for (std::size_t N = M; N <= *settle; ++N)
            if (!holds(N)) return violated(N, "closed-form region");
        return {TailsVerdict::Kind::BoundedWitnessed, 0, "tail ratio non-increasing from N=" +
                                                             std::to_string(*settle)};
    }

    // The ratio grows without bound, so a violation exists; find it.
    constexpr std::size_t kSearch = 4096;
    for (std::size_t N = M; N < M + kSearch; ++N)
        if (!holds(N)) return violated(N, "closed-form search");
    return {TailsVerdict::Kind::Inconclusive, 0,
            "tail ratio unbounded but no violation within search window"};
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::size_t, std::size_t>> DelaySchedule::resolve(const ApproxMatrix& m) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t rows = m.rows.size();
    switch (kind) {
        case Kind::RowMajor:
            for (std::size_t i = 1; i <= rows; ++i)
                for (std::size_t j = 1; j <= m.rows[i - 1].size(); ++j) out.emplace_back(i, j);
            break;
        case Kind::Diagonal: {
            std::size_t longest = 0;
            for (const auto& r : m.rows) longest = std::max(longest, r.size());
            for (std::size_t s = 2; s <= rows + longest; ++s)
                for (std::size_t i = 1; i <= rows && i < s; ++i) {
                    const std::size_t j = s - i;
                    if (j <= m.rows[i - 1].size()) out.emplace_back(i, j);
                }
            break;
        }
        case Kind::Explicit: out = order; break;
    }
    return out;
}

DelayResult series_delay(const ApproxMatrix& approx, const DelaySchedule& schedule) {
    std::size_t cells = 0;
    for (const auto& row : approx.rows) {
        if (row.empty()) throw SpecificationError("approximation rows must be non-empty");
        Rational prev;
        for (const auto& v : row) {
            if (v < prev) throw SpecificationError("approximation row is not non-decreasing from 0");
            prev = v;
        }
        cells += row.size();
    }

    const auto order = schedule.resolve(approx);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [i, j] : order) {
        if (i < 1 || i > approx.rows.size() || j < 1 || j > approx.rows[i - 1].size())
            throw SpecificationError("schedule names a cell outside the matrix");
        if (!seen.emplace(i, j).second) throw SpecificationError("schedule repeats a cell");
    }
    if (seen.size() != cells) throw SpecificationError("schedule misses some cells");

    DelayResult result;
    result.first_position.assign(approx.rows.size(), 0);
    std::vector<Rational> terms;
    for (const auto& [i, j] : order) {
        const auto& row = approx.rows[i - 1];
        terms.push_back(j == 1 ? row[0] : row[j - 1] - row[j - 2]);
        if (result.first_position[i - 1] == 0) result.first_position[i - 1] = terms.size();
    }
    result.series = SeriesSpec::finite(std::move(terms));
    return result;
}

std::vector<std::size_t> delay_tail_violations(const ApproxMatrix& approx, const DelayResult& result) {
    std::vector<std::size_t> bad;
    const std::size_t rows = approx.rows.size();
    for (std::size_t N = 1; N <= rows; ++N) {
        std::size_t start = result.first_position[N - 1];
        Rational limit_tail;
        for (std::size_t i = N; i <= rows; ++i) {
            start = std::min(start, result.first_position[i - 1]);
            limit_tail += approx.rows[i - 1].back();
        }
        if (result.series.tail_sum(start) < limit_tail) bad.push_back(N);
    }
    return bad;
}

}  // namespace randlab
