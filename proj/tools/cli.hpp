#pragma once

// The fusionq command line, callable in-process so tests can drive it.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error,
// 3 a mathematical invariant was violated (regularity, an unexpected pole).

#include <ostream>
#include <string>
#include <vector>

namespace fusionq::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kMath = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shapes with at least this many boxes skip the symbolic row of bench.
inline constexpr int kBenchSymbolicLimit = 7;

}  // namespace fusionq::cli
