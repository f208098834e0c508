#pragma once

#include <iosfwd>

namespace toricsym::cli {

/// Exit codes: 0 success, 2 usage or validation error, 1 internal failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricsym::cli
