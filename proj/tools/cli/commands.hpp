#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fleetic::cli {

/// Exit codes: 0 success, 1 usage, 2 validation, 3 solver guard, 4 I/O.
inline constexpr int kExitUsage = 1;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fleetic::cli
