#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mplanes::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomain = 3,
};

// Runs one command line (without the program name). Reads GA_TOLERANCE
// from the environment to override the default classification tolerance.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mplanes::cli
