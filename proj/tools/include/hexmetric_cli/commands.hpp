#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hexmetric::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInputError = 2,
  kInfeasible = 3,
  kNotConverged = 4,
  kVerificationFailed = 5,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexmetric::cli
