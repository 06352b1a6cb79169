#pragma once

#include <vector>

#include "bzeta/dcx.hpp"
#include "bzeta/eval.hpp"
#include "bzeta/params.hpp"

namespace bzeta {

// Data for a multiple q-shifted factorial.  The plain factorial requires all
// |q_k| < 1.  The generalized (tilde) variant requires |q_k| != 1 with the
// entries of modulus > 1 listed first; `split` is their count l.
struct QData {
  cdouble x;
  std::vector<cdouble> qs;
  int split = 0;
};

// (x; q)_{r,inf} = prod_{m in N0^r} (1 - q_1^{m_1} ... q_r^{m_r} x),
// computed shell by shell in log space.  (x)_{0,inf} = 1 - x.
EvalResult qpoch_multi(const QData& d, double tol);

// Generalized factorial: entries of modulus > 1 are inverted and absorbed
// into x, and the result is raised to (-1)^l:
//   (x; q)~ = ((prod_{k<=l} q_k^{-1}) x ; q with first l inverted)^{(-1)^l}.
EvalResult qpoch_tilde(const QData& d, double tol);

// eta(tau) = e^{pi i tau / 12} prod_{m>=1} (1 - e^{2 pi i m tau}).
EvalResult dedekind_eta(cdouble tau, double tol);

// sum_{n>=1} n^{2N-1} q^n / (1 - q^n) with q = e^{2 pi i tau}, N >= 1.
EvalResult lambert_sum(int N, cdouble tau, double tol);

// General-exponent Lambert series sum_{n>=1} n^p q^n / (1 - q^n).
EvalResult lambert_sum_exp(int p, cdouble tau, double tol);

// prod_k (x_k^{+-1}~; q-hat_k^{+-1}~)_{r-1,inf} over the normalized data of
// (z, omega); sign = +1 or -1 selects the direction.  Requires the order
// condition.
EvalResult iseki_product(int sign, cdouble z, const ParameterVector& omegas,
                         double tol);

} // namespace bzeta
