#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrtopo::cli {

inline constexpr const char* kToolName = "arrtopo";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
    exit_pass = 0,
    exit_violation = 1,
    exit_usage = 2,
};

/// Entry point behind main(); args excludes the program name. Reports go to
/// --out when given, otherwise to `out`. Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace arrtopo::cli
