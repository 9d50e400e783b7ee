#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaiotto {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Hard ceiling on any requested degree cap.
inline constexpr int kMaxDegreeCap = 12;

/// Entry point of the `gaiotto` tool; args excludes the program name. Writes
/// the report to `out` and diagnostics to `err`, returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaiotto
