#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "randlab/cantor.hpp"
#include "randlab/errors.hpp"
#include "randlab/rational.hpp"

namespace randlab {

enum class ModelKind { Plain, Prefix };

std::string to_string(ModelKind k);
ModelKind parse_model_kind(const std::string& s);

/// Provenance of a table: which interpreter produced it and with what limits.
struct ModelHeader {
    std::string machine_id;
    ModelKind kind = ModelKind::Plain;
    unsigned max_program_length = 0;
    unsigned long step_budget = 0;
    std::size_t max_length = 0;  // every string up to this length has an entry

    friend bool operator==(const ModelHeader&, const ModelHeader&) = default;
};

/// Finite table of plain (C) or prefix (K) complexities. An entry of nullopt
/// means UNDEFINED: no program of bounded length halted with that output
/// within the step budget.
template <ModelKind K>
class ComplexityTable {
public:
    using Value = std::optional<unsigned>;

    ComplexityTable() = default;
    ComplexityTable(ModelHeader header, std::map<Bits, Value> entries)
        : header_(std::move(header)), entries_(std::move(entries)) {
        header_.kind = K;
        for (const auto& [x, v] : entries_) require_bits(x);
    }

    static constexpr ModelKind kind = K;

    const ModelHeader& header() const { return header_; }
    const std::map<Bits, Value>& entries() const { return entries_; }
    std::size_t max_length() const { return header_.max_length; }
    bool has(const Bits& x) const { return entries_.count(x) != 0; }

    /// Throws DomainError for strings outside the table.
    Value lookup(const Bits& x) const {
        auto it = entries_.find(x);
        if (it == entries_.end()) throw DomainError("string '" + x + "' is not in the complexity table");
        return it->second;
    }

    friend bool operator==(const ComplexityTable&, const ComplexityTable&) = default;

private:
    ModelHeader header_;
    std::map<Bits, Value> entries_;
};

using PlainModel = ComplexityTable<ModelKind::Plain>;
using PrefixModel = ComplexityTable<ModelKind::Prefix>;

struct CountingViolation {
    unsigned m;
    unsigned long count;  // |{x : C(x) < m}|, which reached 2^m
};

struct ValidationReport {
    ModelKind kind = ModelKind::Plain;
    bool coverage_ok = true;            // all strings up to max_length present
    std::vector<Bits> missing;          // first few absent strings, if any
    std::vector<CountingViolation> violations;  // plain only
    Rational kraft_sum;                 // prefix only
    bool passed = true;
};

ValidationReport validate_model(const PlainModel& model);
ValidationReport validate_model(const PrefixModel& model);

/// m(x) = 2^{-K(x)}; 0 when K(x) is UNDEFINED.
Rational semimeasure(const PrefixModel& model, const Bits& x);

struct ProfileRow {
    std::size_t n = 0;
    std::optional<long> plain_gap;   // n - C(x_1..x_n)
    std::optional<long> prefix_gap;  // n + K(n) - K(x_1..x_n)
    std::optional<long> plain_running_min;
    std::optional<long> prefix_running_min;
};

/// One row per prefix length n = 1..min(|x|, max table length). Undefined
/// lookups leave the gap empty rather than failing.
std::vector<ProfileRow> profile(const PlainModel& plain, const PrefixModel& prefix, const Bits& x);

}  // namespace randlab
