#pragma once

#include <iosfwd>

namespace akns::cli {

inline constexpr const char* kToolName = "akns-cli";
inline constexpr const char* kVersion = "1.0.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line. Input files default to `in` when no --input is
/// given or the path is "-". Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace akns::cli
