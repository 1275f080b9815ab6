#pragma once

// The coeffs, solve, validate and bench subcommands.

#include "vekua/config.hpp"
#include "vekua/execution.hpp"

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace vekua {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitNumerical = 2,
    kExitValidation = 3,
};

struct CommandOptions {
    std::filesystem::path out_dir = ".";
    Execution execution = Execution::parallel;
    /// Repetitions per method for `bench`.
    int repeats = 1;
};

int cmd_coeffs(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_solve(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_validate(const RunConfig& config, const CommandOptions& options, std::ostream& log);
int cmd_bench(const RunConfig& config, const CommandOptions& options, std::ostream& log);

/// Loads the config and runs `command`, mapping ConfigError, DomainError and
/// YAML errors to 1 and NumericalError to 2. Messages go to `err`.
int run_command(std::string_view command, const std::filesystem::path& config_path,
                const CommandOptions& options, std::ostream& log, std::ostream& err);

} // namespace vekua
