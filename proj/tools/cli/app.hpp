#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fracon::cli {

/// Full command-line entry point: parses argv, merges defaults < --config file < flags,
/// and runs the selected subcommand. Returns the process exit code.
int app_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fracon::cli
