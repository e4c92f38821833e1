#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toughham::cli {

/// Exit codes: 0 success, 1 a claim check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace toughham::cli
