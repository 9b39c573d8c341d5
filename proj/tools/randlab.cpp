#include <CLI11.hpp>

#include <iostream>

#include "randlab/errors.hpp"
#include "randlab/jobs/config.hpp"
#include "randlab/jobs/jobs.hpp"

namespace rj = randlab::jobs;

int main(int argc, char** argv) {
    CLI::App app{"randlab: exact finite checks for randomness tests and covers"};
    app.require_subcommand(1, 1);

    std::string config_path, out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_depth, max_program_length;
    std::optional<unsigned long> step_budget;

    for (auto kind : rj::all_job_kinds()) {
        auto* sub = app.add_subcommand(rj::subcommand_name(kind), "run a " + rj::to_string(kind) + " job");
        sub->add_option("--config", config_path, "job configuration (YAML)")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "directory for report.txt, report.json and artifacts");
        sub->add_option("--seed", seed, "override the config seed");
        sub->add_option("--max-depth", max_depth, "largest cylinder depth a job may materialize");
        sub->add_option("--max-program-length", max_program_length, "override for ENUMERATE_MACHINE");
        sub->add_option("--step-budget", step_budget, "override for ENUMERATE_MACHINE");
    }

    CLI11_PARSE(app, argc, argv);
    const auto kind = *rj::parse_subcommand(app.get_subcommands().front()->get_name());

    rj::Report report;
    try {
        rj::RunOptions opts;
        opts.cap_bytes = rj::cap_bytes_from_env(opts.cap_bytes);
        if (max_depth) opts.max_depth = *max_depth;

        auto cfg = rj::load_config(config_path);
        if (cfg.kind != kind)
            throw randlab::InputError("config declares job " + rj::to_string(cfg.kind) + " but subcommand is " +
                                      rj::subcommand_name(kind));
        if (seed) cfg.seed = *seed;
        if (max_program_length) cfg.machine.max_program_length = static_cast<unsigned>(*max_program_length);
        if (step_budget) cfg.machine.step_budget = *step_budget;

        report = rj::run_job(cfg, opts);
    } catch (const randlab::Error& e) {
        std::cerr << "randlab: " << e.what() << '\n';
        return static_cast<int>(rj::ExitCode::InputError);
    }

    std::cout << report.text();
    if (!out_dir.empty()) {
        try {
            rj::write_outputs(report, out_dir);
        } catch (const std::exception& e) {
            std::cerr << "randlab: cannot write outputs: " << e.what() << '\n';
            return static_cast<int>(rj::ExitCode::ResourceError);
        }
    }
    return static_cast<int>(report.exit_code());
}
