#pragma once

#include <ostream>

namespace tuhyper::cli {

enum ExitCode : int {
  kAnswered = 0,
  kViolated = 1,
  kInputError = 2,
  kLimitExceeded = 3,
  kInternalError = 4,
};

struct Terminal {
  bool color = false;
};

// Parses argv, runs one command, writes stdout text to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, Terminal term = {});

}  // namespace tuhyper::cli
