#pragma once

#include <ostream>

namespace cyclepack::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kHypothesisViolation = 2;
inline constexpr int kUsage = 64;

/// Entry point behind the `cyclepack` binary, with the streams injectable so
/// tests can drive every subcommand in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclepack::cli
