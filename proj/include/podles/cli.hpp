#pragma once

// Command-line front end: normal-form, build, check, coeffs, export.

#include <iosfwd>
#include <string>
#include <vector>

namespace podles::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Output goes to out unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace podles::cli
