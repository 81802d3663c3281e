#pragma once

#include <iosfwd>

namespace ivalid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUncertified = 2;

/// Entry point of the `ivalid` command line tool; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ivalid::cli
