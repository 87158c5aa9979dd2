#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apw::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

// Runs one command. `args` excludes the program name. Reports go to `out`
// (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apw::cli
