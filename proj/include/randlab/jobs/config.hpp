#pragma once

// Job configuration files (YAML). Every file a config names is read while
// parsing, so a parsed JobConfig is self-contained.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "randlab/block_cover.hpp"
#include "randlab/complexity.hpp"
#include "randlab/q_pipeline.hpp"
#include "randlab/series.hpp"
#include "randlab/test_functions.hpp"
#include "randlab/toy_machine.hpp"

namespace randlab::jobs {

enum class JobKind {
    ValidateModel,
    EnumerateMachine,
    Profile,
    PlainTest,
    Gacs,
    Tails,
    Conidis,
    Fatou,
    SlowCover,
    SlowCover2D,
    QPipeline,
};

std::string to_string(JobKind k);
std::optional<JobKind> parse_job_kind(const std::string& s);
/// "validate-model" etc.
std::string subcommand_name(JobKind k);
std::optional<JobKind> parse_subcommand(const std::string& s);
std::vector<JobKind> all_job_kinds();

struct InputDigest {
    std::string name;
    std::string sha256;
};

struct JobConfig {
    JobKind kind = JobKind::ValidateModel;
    std::string config_sha256;
    std::vector<InputDigest> inputs;  // referenced files, in order of appearance

    std::uint64_t seed = 0;
    std::size_t random_instances = 0;  // > 0: run a generated suite instead of inline inputs

    // models
    std::optional<PlainModel> plain;
    std::optional<PrefixModel> prefix;
    ToyMachineConfig machine;
    Bits x;
    unsigned m = 0;
    std::size_t depth = 0;
    std::size_t depth_cap = kDefaultTestDepthCap;

    // series
    std::optional<SeriesSpec> a;
    std::optional<SeriesSpec> b;
    std::optional<SeriesSpec> rho;
    Rational c = Rational(1);
    std::size_t horizon = 32;
    std::optional<ApproxMatrix> approx;
    DelaySchedule schedule;

    // sequences
    std::optional<SetSeq> sets;
    std::optional<FuncSeq> funcs;
    std::optional<Func2DSeq> funcs2d;
    std::optional<EpsilonSchedule> eps_schedule;
    std::size_t block_cap = kDefaultBlockCap;
    Rational eps;
    long k_min = 0;
    long k_max = 0;
    std::vector<LazyPoint> points;
};

/// Parses a YAML job. Relative file paths resolve against base_dir. Schema
/// problems raise ParseError with the line and column of the offending node.
JobConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = ".");

/// Reads and parses a config file.
JobConfig load_config(const std::filesystem::path& path);

}  // namespace randlab::jobs
