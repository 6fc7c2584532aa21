#pragma once

#include <ostream>

namespace ceresa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNoCertificate = 3;
inline constexpr int kExitInternal = 4;
inline constexpr int kExitUsage = 64;

/// Entry point of the `ceresa` command line tool. JSON (or a table with --table) goes to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ceresa
