#pragma once

#include <iosfwd>

namespace zfc::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;

/// Runs one command line. Reports go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zfc::cli
