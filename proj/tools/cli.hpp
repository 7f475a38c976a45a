#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klein::cli {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kOutOfScope = 3 };

// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klein::cli
