#pragma once

#include <cmath>
#include <limits>

namespace bzeta::detail {

// Upper bound for sum_{n > N} n^a rho^n with 0 < rho < 1.
//
// For a <= 0 the terms are majorized by (N+1)^a rho^n.  For a > 0 use
// n^a <= (N+1)^a exp(a (n-N-1)/(N+1)), valid since (1+x)^a <= e^{ax}; the
// tail is then geometric with ratio rho * exp(a/(N+1)) when that is < 1,
// otherwise the bound is reported as infinite and the caller keeps summing.
inline double tail_power_geometric(long N, double a, double rho) {
  if (!(rho > 0.0)) return 0.0;
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  const double head = std::pow(static_cast<double>(N + 1), a) *
                      std::pow(rho, static_cast<double>(N + 1));
  if (a <= 0.0) {
    return head / (1.0 - rho);
  }
  const double ratio = rho * std::exp(a / static_cast<double>(N + 1));
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return head / (1.0 - ratio);
}

} // namespace bzeta::detail
