#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace salsa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the salsa command line with args[0] as the program name. Reports go
// to out, errors to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace salsa::cli
