#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricsr::cli {

enum ExitCode : int {
  strongly_robust = 0,
  not_strongly_robust = 1,
  invalid_input = 2,
  oracle_mismatch = 3,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricsr::cli
