#pragma once

#include <iosfwd>

namespace altruns::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `altruns` command line. Normal output goes to `out`, usage and
/// error messages to `err`. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace altruns::cli
