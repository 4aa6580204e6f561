#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zagreb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point for the `zagreb` tool. `args` excludes the program name.
/// Returns 0 on success, 1 when `verify` finds a failing claim and 2 on
/// usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zagreb::cli
