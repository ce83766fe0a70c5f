#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitBadConfig = 2;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

// Entry point of the command-line tool. JSON goes to --output (or `out`), CSV to
// --csv when given, diagnostics to `err`. Returns one of the exit codes above.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zap
