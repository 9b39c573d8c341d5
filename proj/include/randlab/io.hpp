#pragma once

// Canonical text forms. Every writer emits sorted, canonical output so equal
// values serialize to identical bytes; every reader reports problems as
// ParseError with a 1-based line and column. The empty bit string is written
// as "-".

#include <string>
#include <string_view>

#include "randlab/basic_func.hpp"
#include "randlab/complexity.hpp"
#include "randlab/plane.hpp"
#include "randlab/slow_cover.hpp"

namespace randlab {

std::string sha256_hex(std::string_view data);

std::string bits_token(const Bits& x);

// Model tables:
//   # randlab-model machine_id=<id> kind=<PLAIN|PREFIX> max_program_length=<n>
//     step_budget=<n> max_length=<n> digest=<sha256 of the body>
//   <bits> <value|U>            one line per entry, sorted
std::string model_body(const PlainModel& m);
std::string model_body(const PrefixModel& m);
std::string model_digest(const PlainModel& m);
std::string model_digest(const PrefixModel& m);
std::string write_model(const PlainModel& m);
std::string write_model(const PrefixModel& m);
/// Reads either kind; the digest, when present, must match.
PlainModel read_plain_model(std::string_view text);
PrefixModel read_prefix_model(std::string_view text);
ModelKind peek_model_kind(std::string_view text);

// Open sets: one prefix per line; an empty file is the empty set.
std::string write_openset(const OpenSet& u);
OpenSet read_openset(std::string_view text);

// Basic functions: "depth m", then "<prefix> <value>" per non-zero cylinder.
std::string write_basic_func(const BasicFunc& f);
BasicFunc read_basic_func(std::string_view text);

// 2-D basic functions: "depth m", then "<prefix> <lo> <hi> <value>" boxes.
// Boxes given on one prefix add up.
std::string write_basic_func_2d(const BasicFunc2D& f);
BasicFunc2D read_basic_func_2d(std::string_view text);

// 2-D open sets: "<prefix> <lo> <hi>" per box.
std::string write_openset_2d(const OpenSet2D& w);
OpenSet2D read_openset_2d(std::string_view text);

/// Inverse of trace_csv; eps and T are not part of the CSV and come back as
/// 0 and the last row's t.
SlowCoverTrace read_trace_csv(std::string_view text);

}  // namespace randlab
