#ifndef LINDTR_TOOLS_COMMANDS_HPP
#define LINDTR_TOOLS_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>

namespace lindtr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalFailure = 3;

/// Command-line flags layered over the config file; set fields win.
struct CliOverrides {
    std::optional<double> a;
    std::optional<double> t_f;
    std::optional<int> steps;
    std::optional<std::string> method;
    std::optional<std::string> out_dir;
    std::optional<int> jobs;
    std::optional<double> tol;
};

/// Each command reads the JSON config at `config_path`, applies the
/// overrides, writes its output files, logs to the given streams and
/// returns the process exit code: 0 ok, 1 a check or sweep point failed,
/// 2 bad config or usage, 3 numerical failure.
int cmd_simulate(const std::string& config_path, const CliOverrides& overrides,
                 std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& config_path, const CliOverrides& overrides,
               std::ostream& out, std::ostream& err);
int cmd_sweep(const std::string& config_path, const CliOverrides& overrides,
              std::ostream& out, std::ostream& err);

} // namespace lindtr::cli

#endif
