#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bfmix::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kNumericFailure = 2, kIoError = 3 };

/// Full command-line entry point. `args` excludes the program name. Data goes
/// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bfmix::cli
