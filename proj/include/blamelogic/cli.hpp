#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blamelogic {

enum ExitStatus : int {
  kExitHolds = 0,    // property holds / ok
  kExitFails = 1,    // property fails / counterexample
  kExitUsage = 2,    // usage or input error
};

// Runs the blamecheck command line; `args` excludes the program name.
// Payload goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blamelogic
