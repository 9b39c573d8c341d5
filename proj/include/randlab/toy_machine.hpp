#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "randlab/complexity.hpp"

namespace randlab {

/// Identifier of the interpreter below. Bump it whenever the instruction set
/// or the step accounting changes, since pinned table digests depend on it.
inline constexpr const char* kToyMachineId = "randlab-toy-v1";

/// Largest max_program_length the enumerator accepts (2^25 programs).
inline constexpr unsigned kMaxProgramLengthCap = 24;

// randlab-toy-v1
//
// A program is read bit by bit. Every run is charged 1 step to boot, and
// each instruction is charged 1 step plus one step per output bit it writes.
// A run halts only if its total charge is within the step budget.
//
// The first bit selects the mode:
//   0  literal.   PLAIN:  the rest of the program is the output.
//                 PREFIX: an Elias-gamma code for n+1 follows, then n bits
//                         of output; the program ends there.
//   1  assembly.  Instructions are a prefix code over the remaining bits:
//        0b    append bit b
//        10    out := out ++ out
//        110   out := out ++ complement(out)
//        111   halt
//
// PLAIN runs also halt when the program runs out of bits, and the empty
// program outputs the empty string. PREFIX runs never see the end of the
// program: asking for a missing bit means the program is only a prefix of a
// halting one. A PREFIX program is in the domain iff the run halts having
// read exactly all of its bits, so the domain is prefix-free.

struct ToyMachineConfig {
    ModelKind kind = ModelKind::Plain;
    unsigned max_program_length = 12;
    unsigned long step_budget = 10000;
    std::size_t max_output_length = 12;
    std::string machine_id = kToyMachineId;
};

/// Output of `program` if it halts within `budget` steps (and, for PREFIX,
/// reads exactly all of its bits). Outputs longer than `max_output` are
/// reported as nullopt since they fall outside any table.
std::optional<Bits> run_toy_machine(ModelKind kind, const Bits& program, unsigned long budget,
                                    std::size_t max_output);

PlainModel enumerate_plain(const ToyMachineConfig& cfg);
PrefixModel enumerate_prefix(const ToyMachineConfig& cfg);
std::variant<PlainModel, PrefixModel> enumerate_toy_machine(const ToyMachineConfig& cfg);

}  // namespace randlab
