#pragma once

// Front end of the `qmc` tool, kept in the library so tests can drive it.
//
// Exit codes: 0 pass, 1 verification failed, 2 usage, 3 resource guard.

#include <iosfwd>
#include <string>
#include <vector>

namespace symnet::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symnet::cli
