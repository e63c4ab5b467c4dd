#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spexkm::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumerical = 3 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spexkm::cli
