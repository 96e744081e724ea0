#pragma once

#include <iosfwd>

namespace mstpoly::cli {

/// Process exit codes. stdout carries data, stderr diagnostics.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  ///< a verify check or the Monte Carlo comparison failed
  kExitInputError = 2,   ///< bad flags, unreadable/malformed graph, disconnected graph
  kExitCapRefused = 3,   ///< too many edges to enumerate under the current cap
  kExitRouteDisagreement = 4,
};

/// Entry point of the mstpoly tool; `in` backs the "-" graph source.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mstpoly::cli
