#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treeprof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Dispatches one invocation; args[0] is the program name.
/// Returns 0 on success, 1 when a bound check fails (or a search does not
/// converge), 2 on usage or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeprof::cli
