#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTooLarge = 3;

// Runs one invocation. `args` excludes the program name. Results go to `out`
// (or the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arkit::cli
