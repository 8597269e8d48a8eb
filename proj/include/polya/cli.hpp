#pragma once

#include <iosfwd>

namespace polya::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

/// Runs the command line front end: eig, check, bounds, scan.
/// Returns 0 when every checked inequality holds, 1 on a violation and 2 on a
/// usage or numeric failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polya::cli
