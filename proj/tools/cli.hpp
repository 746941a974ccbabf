#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "iris/matrix.hpp"

namespace iris::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 2,
  kInputError = 3,
  kResourceGuard = 4,
  kDiscrepancies = 5,
};

/// JSON {"rows": ...} or a whitespace-separated integer grid, one row per line.
ComplexIntMatrix parse_matrix(const std::string& text);

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace iris::cli
