#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "randlab/jobs/config.hpp"

namespace randlab::jobs {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Artifact {
    std::string name;  // file name inside the output directory
    std::string content;
};

enum class ExitCode : int { Pass = 0, InvariantFailed = 1, InputError = 2, ResourceError = 3, InternalError = 4 };

/// Everything a job produced. Contains no timestamps or absolute paths, so
/// equal configs and inputs give byte-identical text.
struct Report {
    JobKind kind = JobKind::ValidateModel;
    std::vector<std::pair<std::string, std::string>> echo;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<Artifact> artifacts;
    std::optional<std::string> error;
    ExitCode error_code = ExitCode::Pass;

    bool passed() const;
    ExitCode exit_code() const;
    /// Human-readable report; the last line is "digest: <sha256 of the rest>".
    std::string text() const;
    std::string json() const;
    std::string digest() const;

    const Check* find_check(const std::string& name) const;
    const std::string* find_value(const std::string& name) const;
};

struct RunOptions {
    std::size_t cap_bytes = std::size_t(2) << 30;
    std::size_t max_depth = 20;
};

/// Reads RANDLAB_CAP_BYTES when set.
std::size_t cap_bytes_from_env(std::size_t fallback);

/// Dispatches to the library. Library errors become report errors with a
/// matching exit code rather than exceptions.
Report run_job(const JobConfig& cfg, const RunOptions& opts = {});

/// Writes report.txt, report.json, and every artifact into dir, each via a
/// temporary file and rename.
void write_outputs(const Report& report, const std::filesystem::path& dir);

void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace randlab::jobs
