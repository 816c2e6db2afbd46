#pragma once

#include <ostream>
#include <span>
#include <string>

namespace innerkit::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,  ///< computation succeeded, verdict refuted / negative
    kUsage = 2,     ///< usage or input error
};

/// Runs one command line (args exclude the program name). Writes exactly one
/// JSON document (or a CSV table with --csv) to `out` and diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace innerkit::cli
