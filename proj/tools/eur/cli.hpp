#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eur::cli {

enum ExitCode : int {
  kOk = 0,
  kDomain = 2,
  kConvergence = 3,
  kVerification = 4,
};

/// Parses `args` (without the program name) and runs the selected
/// subcommand. Never throws; every failure is mapped to an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eur::cli
