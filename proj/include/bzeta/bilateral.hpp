#pragma once

#include "bzeta/barnes.hpp"
#include "bzeta/dcx.hpp"
#include "bzeta/eval.hpp"
#include "bzeta/params.hpp"

namespace bzeta {

// Data for a bilateral zeta evaluation.  omega0 must satisfy
// 0 < arg(omega0) <= pi and the strong one-side condition must hold; make()
// enforces both.
struct BilateralRequest {
  cdouble s;
  DirectedComplex z;
  DirectedComplex omega0;
  ParameterVector omegas;

  static BilateralRequest make(cdouble s, const DirectedComplex& z,
                               const DirectedComplex& omega0,
                               const ParameterVector& omegas);
};

// Defining sum of two Barnes zetas,
//   xi_{r+1}(s, z | omega0; omega) = zeta_{r+1}(s, z + omega0 | omega0, omega)
//                                  + zeta_{r+1}(s, z | e^{-pi i} omega0, omega).
// Requires Re(s) > r + 1.5.
EvalResult xi_series(const BilateralRequest& req, double tol);

// Fourier expansion in the normalized frame (omega0 = e^{pi i}):
//   xi_{r+1}(s, z | e^{pi i}; omega)
//     = e^{-i pi s/2} (2 pi)^s / Gamma(s)
//       * sum_n n^{s-1} e^{2 pi i n z} prod_j (1 - e^{2 pi i n omega_j})^{-1}
// for z and every omega_j in the open upper half-plane; entire in s, exactly
// 0 at nonpositive integers.
EvalResult xi_fourier_normal(cdouble s, cdouble z, const ParameterVector& omegas,
                             double tol);

// General evaluation: normalizes by alpha = e^{pi i}/omega0 and uses the
// Fourier expansion when every normalized parameter lands strictly in the
// upper half-plane, falling back to the defining series otherwise.
EvalResult xi(const BilateralRequest& req, double tol);

// d xi_{r+1} / ds (1-m, z | e^{pi i}; omega)
//   = (m-1)!/(2 pi i)^{m-1} sum_n e^{2 pi i n z} / (n^m prod_j (1 - e^{2 pi i n omega_j})).
cdouble xi_deriv_nonpos(int m, cdouble z, const ParameterVector& omegas, double tol);

// The one-sided combinations of Barnes zetas, evaluated through their
// Fourier forms (valid on D (plus D+ / D-); entire in s, 0 at nonpositive
// integers):
//   f±(s, z | omega) = e^{i pi s/2} (2 pi)^s / Gamma(s)
//     sum_k omega_k^{-s} sum_n n^{s-1} e^{±2 pi i n z_k}
//       prod_{j != k} (1 - e^{±2 pi i n omega_jk})^{-1}.
EvalResult f_plus(cdouble s, cdouble z, const ParameterVector& omegas, double tol);
EvalResult f_minus(cdouble s, cdouble z, const ParameterVector& omegas, double tol);

// d f± / ds (-N, z | omega) for integer N >= 0, by the explicit series
//   (-1)^{m-1} (m-1)!/(2 pi i)^{m-1} sum_k omega_k^{m-1}
//     sum_n e^{±2 pi i n z_k} / (n^m prod_{j != k}(1 - e^{±2 pi i n omega_jk})),
// with m = N + 1.
cdouble f_deriv_nonpos(int sign, int N, cdouble z, const ParameterVector& omegas,
                       double tol);

// F(s, z | omega) = f+(s, z | omega) - e^{-i pi s} f-(s, z | omega)
//                 = 2 i sin(pi s) zeta_r(s, z | omega)  for z in D.
EvalResult capital_F(cdouble s, cdouble z, const ParameterVector& omegas, double tol);

// g(s, tau) = xi_2(s, tau | e^{pi i}; tau) - xi_2(s, 1 | tau; 1), tau in the
// upper half-plane.
EvalResult g_function(cdouble s, cdouble tau, double tol);

// dg/ds (1-m, tau) via the derivative series of both xi pieces.
cdouble g_deriv_nonpos(int m, cdouble tau, double tol);

} // namespace bzeta
