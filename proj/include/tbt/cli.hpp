#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tbt::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInvariantViolation = 2,
  kResourceCap = 3,
};

// Entry point of the `tbt` tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace tbt::cli
