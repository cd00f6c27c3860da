#pragma once

#include <iosfwd>

namespace qdeform::cli {

// Exit codes: 0 success, 1 input or domain error, 2 failed verification.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitFailed = 2;

/// Entry point behind the `qdeform` binary. Writes results to `out`, or to
/// the file named by --out, and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qdeform::cli
