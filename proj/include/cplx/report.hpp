#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cplx {

enum class RowStatus {
  // Established by a computation with a checked witness or an exhaustive search.
  Verified,
  // A search supports the claim without proving it.
  Evidence,
  // Taken from the literature; nothing was computed.
  Cited,
  // Search ran out of budget.
  Inconclusive,
  // Computation contradicts the expectation.
  Mismatch,
  Skipped,
};
std::string to_string(RowStatus s);

struct ReportRow {
  std::string fixture;
  std::string property;
  std::string expected;
  RowStatus status = RowStatus::Skipped;
  std::string detail;
  // A mismatch in a hard row fails the report.
  bool hard = false;
  double seconds = 0;
};

struct Report {
  std::vector<ReportRow> rows;
  bool ok() const;
  // Table of fixtures with one column per property.
  std::string table() const;
  // Tab separated rows, one per check.
  std::string machine() const;
};

struct ReportOptions {
  // Skips searches and probabilistic rows.
  bool fast = false;
  std::uint64_t seed = 1;
  bool parallel = true;
};

Report verify_all(const ReportOptions& opt = {});

}  // namespace cplx
