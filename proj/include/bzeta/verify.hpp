#pragma once

#include <string>
#include <vector>

#include "bzeta/dcx.hpp"

namespace bzeta {

// One executed identity check: both sides, residuals, and the verdict.
// pass <=> rel_residual <= tol, or abs_residual <= tol when both sides are
// below 1 in magnitude.
struct IdentityReport {
  std::string name;
  std::string params;
  cdouble lhs{0.0, 0.0};
  cdouble rhs{0.0, 0.0};
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct VerifyConfig {
  unsigned long long seed = 42;
  double tol = 1e-10;
  std::vector<std::string> suites; // empty selects the full catalog
};

// Catalog order is the emission order.
const std::vector<std::string>& suite_names();

// Runs the selected suites; deterministic for a fixed (seed, tol, suites).
// Unknown suite names raise RangeError.
std::vector<IdentityReport> run_suite(const VerifyConfig& cfg);

// Serializations used by the CLI.  Timings are emitted as 0 unless
// `timings` is set, keeping the default output byte-stable across runs.
std::string report_json_line(const IdentityReport& r, bool timings = false);
std::string report_csv_header();
std::string report_csv_row(const IdentityReport& r, bool timings = false);
std::string report_text_line(const IdentityReport& r, bool timings = false);

} // namespace bzeta
