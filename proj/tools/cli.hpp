#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stratitr::cli {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kIoError = 2 };

/// Environment variable holding the default worker-thread count.
inline constexpr const char* kThreadsEnv = "STRATITR_THREADS";

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stratitr::cli
