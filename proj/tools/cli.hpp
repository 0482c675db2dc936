#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclestab::cli {

/// Exit codes: 0 = T1 or verification pass, 1 = T0, rejected certificate or
/// failed verification, 2 = usage, input or precondition error.
inline constexpr int kExitT1 = 0;
inline constexpr int kExitT0 = 1;
inline constexpr int kExitError = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace cyclestab::cli
