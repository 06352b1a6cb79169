#pragma once

#include "bzeta/bernoulli.hpp"
#include "bzeta/dcx.hpp"
#include "bzeta/eval.hpp"
#include "bzeta/params.hpp"

namespace bzeta {

// Distance from an integer below which s is treated as integral.
inline constexpr double kIntegerEps = 1e-6;

struct BarnesRequest {
  cdouble s;
  DirectedComplex z;
  ParameterVector omegas;
};

// Defining lattice series sum_{m in N0^r} (z + m.omega)^{-s}, summed shell by
// shell with an analytic tail bound.  Requires Re(s) > r + 0.5 and the
// one-side condition.  Configurations whose rigorous shell bound cannot meet
// tol within the point budget are finished with the Euler-Maclaurin
// accelerated evaluation (method tag "reduction" in that case).
EvalResult barnes_zeta_direct(const BarnesRequest& req, double tol);

// Analytic continuation by rank-recursive Euler-Maclaurin summation along one
// lattice direction.  Valid for any s away from the poles {1, ..., r} under
// the one-side condition; no cone restriction on z.
EvalResult barnes_zeta_em(const BarnesRequest& req, double tol);

// Fourier expansion: for omega_j in the upper half-plane with strictly
// increasing arguments and z in the open cone D,
//   zeta_r(s, z | omega) = (2 pi)^{s-1} Gamma(1-s)
//       * { e^{ i pi (s-1)/2} sum_k omega_k^{-s} S_k^+
//         + e^{-i pi (s-1)/2} sum_k omega_k^{-s} S_k^- },
// where S_k^{+-} are the exponentially convergent n-series over the
// normalized data.  s within kIntegerEps of an integer in 1..r is a pole;
// integers above r are routed to the direct series.
EvalResult barnes_zeta_fourier(const BarnesRequest& req, double tol);

// Dispatcher: special values at nonpositive integer s, direct series for
// Re(s) > r + 0.5, otherwise rotation into the upper half-plane followed by
// lattice-shift reduction of z into the cone D and the Fourier expansion;
// configurations the shift reduction cannot reach fall back to the
// Euler-Maclaurin continuation.
EvalResult barnes_zeta(const BarnesRequest& req, double tol);

// zeta_r(1-m, z | omega) = (-1)^r (m-1)!/(m+r-1)! B_{r, r+m-1}(z | omega).
cdouble barnes_special_value(int m, cdouble z, const ParameterVector& omegas);

// Res_{s=m} zeta_r(s, z | omega) = (-1)^{r-m} / ((m-1)! (r-m)!)
//   * B_{r, r-m}(z | omega), for m in 1..r.
cdouble barnes_residue(int m, cdouble z, const ParameterVector& omegas);

// Gamma_r(z | omega) = exp(d zeta_r / ds (0, z | omega)); the derivative is
// taken by 5-point central differences with Richardson extrapolation.
cdouble multiple_gamma(const DirectedComplex& z, const ParameterVector& omegas);

} // namespace bzeta
