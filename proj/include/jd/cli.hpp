#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jd::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kNumericalError = 3,
  kIoError = 4,
  kSearchFailure = 5,
};

/// Runs the `jdisc` command line. `args` excludes the program name. Results
/// go to `out` (or to files named by --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jd::cli
