#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dissecta::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kIdentityFailed = 2;

/// Runs one command line (args excludes the program name) and writes the
/// report to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dissecta::cli
