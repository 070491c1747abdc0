#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcalc::cli {

/// Exit codes: 0 every check passed, 1 a mathematical check failed, 2 bad input.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcalc::cli
