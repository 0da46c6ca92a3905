#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csl::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kParse = 2, kDomain = 3, kResource = 4 };

/// Runs the command line tool on args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace csl::cli
