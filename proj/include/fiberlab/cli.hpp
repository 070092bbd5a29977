#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fiberlab::cli {

/// Process exit codes.
enum ExitCode : int { Success = 0, InputFailure = 1, Obstruction = 2 };

/// Runs one command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fiberlab::cli
