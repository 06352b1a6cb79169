#pragma once

#include "bzeta/dcx.hpp"

namespace bzeta {

enum class Method { direct, fourier, special_value, reduction };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::fourier: return "fourier";
    case Method::special_value: return "special-value";
    case Method::reduction: return "reduction";
  }
  return "unknown";
}

// Value with an error estimate for the truncation actually performed.  The
// estimate is rigorous for plain series with analytic tail bounds and
// heuristic (last-term based) for Euler-Maclaurin accelerated paths.
struct EvalResult {
  cdouble value{0.0, 0.0};
  double err_estimate = 0.0;
  long terms_used = 0;
  Method method = Method::direct;
};

} // namespace bzeta
