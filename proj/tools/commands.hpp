#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "transurf/surface.hpp"

namespace transurf::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadInput = 2,
  kNothingValid = 3,
  kTheoremViolation = 4,
};

/// "start:stop:count,start:stop:count"; throws std::invalid_argument.
GridSpec parse_grid(const std::string& text);

/// Runs the command line (args excludes the program name). Normal output
/// goes to out unless --out is given; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transurf::cli
