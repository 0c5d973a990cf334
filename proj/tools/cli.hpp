#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyro::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one gyroctl invocation. `args` excludes the program name.
/// Artifacts go to --out when given, otherwise to `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyro::cli
