#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace venergy::cli {

enum ExitCode : int { kPass = 0, kViolations = 1, kUsage = 2 };

// Full command line without the program name. CSV goes to `out` (or --out),
// summaries and diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace venergy::cli
