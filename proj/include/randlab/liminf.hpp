#pragma once

#include "randlab/seq_spec.hpp"

namespace randlab {

/// Exact ⋃_N ⋂_{n>=N} U_n under the tail rule. Brute-force oracle for the
/// cover constructions.
OpenSet liminf_sets(const SetSeq& spec);

/// Exact liminf_n f_n(p) under the tail rule.
ExtRational liminf_pointwise(const FuncSeq& spec, const LazyPoint& p);

}  // namespace randlab
