#pragma once

#include <string>
#include <vector>

#include "mstpoly/coefficients.hpp"
#include "mstpoly/enumeration.hpp"
#include "mstpoly/graph.hpp"

namespace mstpoly::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  bool route_check = false;  ///< failure means the coefficient routes disagree
};

struct VerifyReport {
  int n = 0;
  int m = 0;
  std::vector<CheckResult> checks;
  /// Cycle identity beyond i = 6; reported, never part of the verdict.
  std::vector<CycleIdentityReport> experimental;

  bool all_pass() const;
  bool route_failure() const;
};

/// Runs the full invariant suite on a connected graph within the cap.
/// Throws DisconnectedGraph / CapExceeded like the underlying operations.
VerifyReport run_verification(const Graph& g, const EnumerationOptions& options, bool experimental);

}  // namespace mstpoly::cli
