#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmcut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitComputation = 3;

/// Runs one subcommand (args exclude the program name) and writes results to
/// `out` and diagnostics to `err`. Returns the process exit code: 0 success,
/// 2 usage error, 3 computation failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qmcut::cli
