#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altruns/oracle.hpp"

namespace altruns {

struct Cell {
  unsigned n = 0;
  long k = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CheckResult {
  std::string name;
  std::string range;
  bool passed = true;
  std::optional<Cell> first_failure;
  std::string detail;
  /// Exactness tripwires (NonDivisible, InexactDivision, NonInteger) raised
  /// while running this check.
  unsigned tripwires = 0;
};

struct VerificationReport {
  unsigned n_max = 0;
  unsigned oracle_max = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  unsigned tripwires() const;
  /// Deterministic JSON: fixed key order, checks in registration order.
  std::string to_json() const;
};

struct VerifyOptions {
  unsigned oracle_cap = kDefaultOracleCap;
  /// Check names or dotted prefixes ("runs" selects every "runs.*"); empty runs all.
  std::vector<std::string> checks;
  /// Adds one to R(n,k) in the reference recurrence table before any
  /// comparison. Test hook for the failure path.
  std::optional<Cell> inject_fault;
  /// Evaluate checks on worker threads. Report order is unaffected.
  bool parallel = true;
};

/// Every check name verify_all knows, in report order.
const std::vector<std::string>& available_checks();

/// Throws DomainError for an unknown check filter, n_max < 2, or an injected
/// fault outside the table. Throws CapExceeded when oracle_max > oracle_cap.
/// Check failures are report entries, never exceptions.
VerificationReport verify_all(unsigned n_max, unsigned oracle_max, const VerifyOptions& options = {});

}  // namespace altruns
