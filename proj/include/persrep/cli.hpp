#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace persrep::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kPropertyViolated = 2, kUnsupported = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace persrep::cli
