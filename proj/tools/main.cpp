#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "commands.hpp"

namespace {

// Raw flag storage; presence is read back via count() after parsing so
// unset flags never override config values.
struct RawFlags {
    std::string config;
    double a = 0.0;
    double t_f = 0.0;
    int steps = 0;
    std::string method;
    std::string out_dir;
    int jobs = 0;
    double tol = 0.0;
};

void add_common_flags(CLI::App& cmd, RawFlags& flags) {
    cmd.add_option("--config", flags.config, "JSON config file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd.add_option("--a", flags.a, "override the time contraction parameter");
    cmd.add_option("--tf", flags.t_f, "override the reference duration t_f");
    cmd.add_option("--steps", flags.steps, "override the grid step count");
    cmd.add_option("--method", flags.method, "integrator: rk4 or expm");
    cmd.add_option("--out", flags.out_dir, "output directory");
    cmd.add_option("--jobs", flags.jobs, "max concurrent sweep runs");
    cmd.add_option("--tol", flags.tol, "override the verification tolerance");
}

lindtr::cli::CliOverrides overrides_from(const CLI::App& cmd,
                                         const RawFlags& flags) {
    lindtr::cli::CliOverrides o;
    if (cmd.count("--a") > 0) o.a = flags.a;
    if (cmd.count("--tf") > 0) o.t_f = flags.t_f;
    if (cmd.count("--steps") > 0) o.steps = flags.steps;
    if (cmd.count("--method") > 0) o.method = flags.method;
    if (cmd.count("--out") > 0) o.out_dir = flags.out_dir;
    if (cmd.count("--jobs") > 0) o.jobs = flags.jobs;
    if (cmd.count("--tol") > 0) o.tol = flags.tol;
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markovian open-system simulator with time-rescaled "
                 "protocol acceleration"};
    app.require_subcommand(1);

    RawFlags simulate_flags, verify_flags, sweep_flags;
    CLI::App* simulate =
        app.add_subcommand("simulate", "integrate one process, write CSV");
    add_common_flags(*simulate, simulate_flags);
    CLI::App* verify = app.add_subcommand(
        "verify", "certify that the accelerated process retraces the "
                  "reference trajectory");
    add_common_flags(*verify, verify_flags);
    CLI::App* sweep = app.add_subcommand(
        "sweep", "run a parameter grid, one CSV per point and contraction");
    add_common_flags(*sweep, sweep_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lindtr::cli::kExitConfigError;
    }

    if (simulate->parsed()) {
        return lindtr::cli::cmd_simulate(
            simulate_flags.config, overrides_from(*simulate, simulate_flags),
            std::cout, std::cerr);
    }
    if (verify->parsed()) {
        return lindtr::cli::cmd_verify(verify_flags.config,
                                       overrides_from(*verify, verify_flags),
                                       std::cout, std::cerr);
    }
    return lindtr::cli::cmd_sweep(sweep_flags.config,
                                  overrides_from(*sweep, sweep_flags),
                                  std::cout, std::cerr);
}
