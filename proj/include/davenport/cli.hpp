#pragma once

#include <iosfwd>

namespace davenport {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParse = 2,
  kExitPGroup = 3,
  kExitPrecondition = 4,
  kExitBudget = 5,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace davenport
