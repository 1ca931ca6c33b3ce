#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brace_forge::cli {

/// Exit codes.
enum Exit : int { kOk = 0, kAxiomFailure = 1, kIoError = 2, kPrecondition = 3 };

/// Runs the brace-forge command line; args exclude the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace brace_forge::cli
