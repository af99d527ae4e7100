#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "varspace_cli/config.hpp"

namespace varspace::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Subcommand names accepted by run_command.
const std::vector<std::string>& command_names();

/**
 * Runs one subcommand. The plain-text report goes to out and, when
 * config.out is set, to <out>/report.txt next to the command's CSV.
 * Returns kExitPass or kExitFailure; configuration and IO problems throw.
 */
int run_command(const std::string& name, const RunConfig& config, std::ostream& out);

}  // namespace varspace::cli
