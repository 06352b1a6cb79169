#pragma once

#include <vector>

#include "bzeta/dcx.hpp"
#include "bzeta/params.hpp"

namespace bzeta {

// Power series in t truncated at a fixed order; coefficients of t^0..t^L.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order)
      : coeffs_(order + 1, cdouble(0.0, 0.0)) {}

  std::size_t order() const { return coeffs_.size() - 1; }
  cdouble& operator[](std::size_t i) { return coeffs_[i]; }
  const cdouble& operator[](std::size_t i) const { return coeffs_[i]; }

  TruncatedSeries operator*(const TruncatedSeries& other) const;

  // exp(z t) truncated at the given order.
  static TruncatedSeries exp_zt(cdouble z, std::size_t order);

  // (w t) / (e^{w t} - 1) = sum_m B_m (w t)^m / m!, truncated.
  static TruncatedSeries bernoulli_factor(cdouble w, std::size_t order);

private:
  std::vector<cdouble> coeffs_;
};

// Classical Bernoulli number B_m, B_1 = -1/2 (generating function t/(e^t-1)).
// Supported for m <= 64.
double bernoulli_number(int m);

// Multiple Bernoulli polynomial as an explicit polynomial in z.
struct BernoulliPoly {
  int r = 0;
  int n = 0;
  ParameterVector omegas;
  std::vector<cdouble> coeffs_in_z; // length n+1, coeffs of z^0..z^n

  cdouble eval(cdouble z) const;
};

// B_{r,n}(z | omega): coefficient of t^n/n! in t^r e^{zt} / prod(e^{w_j t}-1).
// Requires r == omegas.size(), n <= 60, and every omega_j nonzero.
cdouble multiple_bernoulli(int r, int n, cdouble z, const ParameterVector& omegas);

// B_{r,k}(z | omega) / k! for k = 0..K in one pass.
std::vector<cdouble> multiple_bernoulli_over_fact(int K, cdouble z,
                                                  const ParameterVector& omegas);

// All z-coefficients of B_{r,n}(.|omega) at once.
BernoulliPoly multiple_bernoulli_poly(int r, int n, const ParameterVector& omegas);

} // namespace bzeta
