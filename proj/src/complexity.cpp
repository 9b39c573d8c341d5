#include "randlab/complexity.hpp"

#include <algorithm>

namespace randlab {

std::string to_string(ModelKind k) { return k == ModelKind::Plain ? "PLAIN" : "PREFIX"; }

ModelKind parse_model_kind(const std::string& s) {
    if (s == "PLAIN") return ModelKind::Plain;
    if (s == "PREFIX") return ModelKind::Prefix;
    throw InputError("unknown model kind '" + s + "' (expected PLAIN or PREFIX)");
}

namespace {

template <ModelKind K>
void check_coverage(const ComplexityTable<K>& model, ValidationReport& report) {
    if (model.entries().empty()) throw InputError("complexity table is empty");
    for (const auto& x : all_strings_up_to(model.max_length())) {
        if (model.has(x)) continue;
        report.coverage_ok = false;
        if (report.missing.size() < 8) report.missing.push_back(x);
    }
}

}  // namespace

ValidationReport validate_model(const PlainModel& model) {
    ValidationReport report;
    report.kind = ModelKind::Plain;
    check_coverage(model, report);

    // count[v] = number of strings with C = v; the counting bound only needs
    // checking at each m, but the running count changes only at m = v + 1.
    std::map<unsigned, unsigned long> count;
    for (const auto& [x, v] : model.entries())
        if (v) ++count[*v];
    const unsigned top = count.empty() ? 0 : count.rbegin()->first + 1;
    unsigned long below = 0;  // |{x : C(x) < m}|
    for (unsigned m = 0; m <= top; ++m) {
        if (m > 0) {
            auto it = count.find(m - 1);
            if (it != count.end()) below += it->second;
        }
        const bool ok = m >= 63 || below < (1UL << m);
        if (!ok) report.violations.push_back({m, below});
    }
    report.passed = report.coverage_ok && report.violations.empty();
    return report;
}

ValidationReport validate_model(const PrefixModel& model) {
    ValidationReport report;
    report.kind = ModelKind::Prefix;
    check_coverage(model, report);
    for (const auto& [x, v] : model.entries())
        if (v) report.kraft_sum += Rational::pow2(-static_cast<long>(*v));
    report.passed = report.coverage_ok && report.kraft_sum <= Rational(1);
    return report;
}

Rational semimeasure(const PrefixModel& model, const Bits& x) {
    const auto k = model.lookup(x);
    return k ? Rational::pow2(-static_cast<long>(*k)) : Rational();
}

std::vector<ProfileRow> profile(const PlainModel& plain, const PrefixModel& prefix, const Bits& x) {
    require_bits(x);
    std::vector<ProfileRow> rows;
    const std::size_t horizon = std::min({x.size(), plain.max_length(), prefix.max_length()});
    std::optional<long> pmin;
    std::optional<long> kmin;
    const auto find = [](const auto& model, const Bits& s) -> std::optional<unsigned> {
        auto it = model.entries().find(s);
        return it == model.entries().end() ? std::nullopt : it->second;
    };
    for (std::size_t n = 1; n <= horizon; ++n) {
        ProfileRow row;
        row.n = n;
        const Bits head = x.substr(0, n);
        const long ln = static_cast<long>(n);
        if (auto c = find(plain, head)) row.plain_gap = ln - static_cast<long>(*c);
        auto k = find(prefix, head);
        auto kn = find(prefix, binary_of(n));
        if (k && kn) row.prefix_gap = ln + static_cast<long>(*kn) - static_cast<long>(*k);
        if (row.plain_gap) pmin = pmin ? std::min(*pmin, *row.plain_gap) : *row.plain_gap;
        if (row.prefix_gap) kmin = kmin ? std::min(*kmin, *row.prefix_gap) : *row.prefix_gap;
        row.plain_running_min = pmin;
        row.prefix_running_min = kmin;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace randlab
