#pragma once

#include "cli/config.hpp"

#include <ostream>

namespace fracon::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int config = 1;     // config, parse or precondition problem
inline constexpr int violated = 2;   // violation found or an inequality link fails
inline constexpr int numeric = 3;    // evaluation or integration failure
} // namespace exit_code

/// Runs one subcommand on a config that has already been merged from file and flags.
/// The report goes to cfg.out when set, to `out` otherwise; errors go to `err`.
/// Never throws; every failure maps onto an exit code.
int run(Command cmd, const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace fracon::cli
