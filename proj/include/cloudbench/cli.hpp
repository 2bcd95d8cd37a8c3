#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cloudbench {

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success, 1 runtime or domain failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cloudbench
