#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xsign::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xsign::cli
