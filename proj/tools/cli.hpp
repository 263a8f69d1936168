#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grouprep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

/// Runs one command line (without the program name). Verdicts and reports
/// go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grouprep::cli
