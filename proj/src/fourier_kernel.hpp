#pragma once

#include <cmath>
#include <vector>

#include "bzeta/dcx.hpp"
#include "bzeta/errors.hpp"
#include "bzeta/params.hpp"
#include "tail.hpp"

namespace bzeta::detail {

// One exponentially convergent n-series of a Fourier expansion, for a fixed
// normalizing index k.  Denominator factors whose exponential grows are
// rewritten with the reciprocal pulled into the leading exponential, so every
// exponential evaluated decays:
//   sign = +:  (-1)^{k-1} sum_n n^{s-1} E0^n prod_j (1 - A_j^n)^{-1},
//              E0 = e^{2 pi i (z_k - sum_{j<k} w_jk)},
//   sign = -:  (-1)^{r-k} sum_n n^{s-1} E0^n prod_j (1 - A_j^n)^{-1},
//              E0 = e^{2 pi i (sum_{j>k} w_jk - z_k)},
// with A_j = e^{-2 pi i w_jk} for j < k and e^{2 pi i w_jk} for j > k.
inline cdouble fourier_k_series(int sign, cdouble s, const NormalizedParams& np,
                                std::size_t r, double tol, long& terms, double& err) {
  const std::size_t k = np.k;
  std::vector<cdouble> decay; // exponents with positive imaginary part
  cdouble w0 = (sign > 0) ? np.z_k : -np.z_k;
  for (std::size_t idx = 0; idx < np.omega_jk.size(); ++idx) {
    const std::size_t j = (idx + 1 <= k - 1) ? idx + 1 : idx + 2; // original index
    const cdouble a = (j < k) ? -np.omega_jk[idx] : np.omega_jk[idx];
    if (!(a.imag() > 0.0)) {
      throw DomainError("fourier series: parameters with equal arguments");
    }
    decay.push_back(a);
    if (sign > 0 && j < k) w0 += a;
    if (sign < 0 && j > k) w0 += a;
  }
  const double sigma = s.real();
  const bool on_boundary = std::abs(w0.imag()) <= 1e-12;
  if (w0.imag() < 0.0 && !on_boundary) {
    throw DomainError("fourier series: effective exponent not in the upper half-plane");
  }
  if (on_boundary && !(sigma < -0.05)) {
    throw DomainError("fourier series: boundary exponent needs Re(s) < 0");
  }
  const double sgn_factor = ((sign > 0 ? k - 1 : r - k) % 2 == 0) ? 1.0 : -1.0;

  double C = 1.0;
  const double rho = std::exp(-kTwoPi * w0.imag());
  for (const cdouble& a : decay) {
    C /= 1.0 - std::exp(-kTwoPi * a.imag());
  }
  // Boundary case (|E0| = 1, E0 != 1): summation by parts bounds the tail of
  // the oscillating series by the envelope of the first omitted term plus the
  // total variation of the slowly varying part, all over |1 - E0|.
  double boundary_amp = 0.0;
  if (on_boundary) {
    const cdouble E0 = std::exp(cdouble(0.0, kTwoPi) * w0);
    const double dist = std::abs(1.0 - E0);
    if (dist < 1e-9) {
      throw DomainError("fourier series: boundary exponent at a lattice point");
    }
    boundary_amp = C * (1.0 + std::abs(s - 1.0) / (1.0 - sigma)) / dist;
    const double n_needed =
        std::pow(boundary_amp / (0.1 * tol), 1.0 / (1.0 - sigma));
    if (n_needed > 5e6) {
      throw ConvergenceError("fourier series: boundary series too slow for this tolerance");
    }
  }

  double scale = std::abs(w0);
  for (const cdouble& a : decay) scale += std::abs(a);

  cdouble acc(0.0, 0.0);
  double round_err = 0.0;
  const cdouble i2pi(0.0, kTwoPi);
  for (long n = 1;; ++n) {
    const double dn = static_cast<double>(n);
    cdouble t = std::exp((s - 1.0) * std::log(dn) + i2pi * (dn * w0));
    for (const cdouble& a : decay) {
      t /= 1.0 - std::exp(i2pi * (dn * a));
    }
    acc += t;
    ++terms;
    // The phase 2 pi n w0 carries the rounding of its inputs; near-coinciding
    // omega arguments make |t_n| large against the eventual sum, so this
    // conditioning term is what dominates the honest error there.
    round_err += std::abs(t) * (4.0 + kTwoPi * dn * scale) * 1.1e-16;
    const double bound =
        on_boundary ? boundary_amp * std::pow(dn + 1.0, sigma - 1.0)
                    : C * tail_power_geometric(n, sigma - 1.0, rho);
    if (bound <= tol * std::max(std::abs(acc), 1e-300) || bound <= 0.01 * round_err) {
      err = bound + round_err;
      break;
    }
    if (n > 5000000) {
      throw ConvergenceError("fourier series: tolerance unreachable (ratio too close to 1)");
    }
  }
  return sgn_factor * acc;
}

// sum_{n>=1} n^{s-1} e^{2 pi i n z} prod_j (1 - e^{2 pi i n omega_j})^{-1}
// for z and every omega_j in the open upper half-plane.
inline cdouble xi_normal_series(cdouble s, cdouble z, const std::vector<cdouble>& omegas,
                                double tol, long& terms, double& err) {
  if (!(z.imag() > 0.0)) {
    throw DomainError("xi series: z must lie in the open upper half-plane");
  }
  double C = 1.0;
  for (const cdouble& w : omegas) {
    if (!(w.imag() > 0.0)) {
      throw DomainError("xi series: omegas must lie in the open upper half-plane");
    }
    C /= 1.0 - std::exp(-kTwoPi * w.imag());
  }
  const double rho = std::exp(-kTwoPi * z.imag());
  const double sigma = s.real();
  double scale = std::abs(z);
  for (const cdouble& w : omegas) scale += std::abs(w);

  cdouble acc(0.0, 0.0);
  double round_err = 0.0;
  const cdouble i2pi(0.0, kTwoPi);
  for (long n = 1;; ++n) {
    const double dn = static_cast<double>(n);
    cdouble t = std::exp((s - 1.0) * std::log(dn) + i2pi * (dn * z));
    for (const cdouble& w : omegas) {
      t /= 1.0 - std::exp(i2pi * (dn * w));
    }
    acc += t;
    ++terms;
    round_err += std::abs(t) * (4.0 + kTwoPi * dn * scale) * 1.1e-16;
    const double bound = C * tail_power_geometric(n, sigma - 1.0, rho);
    if (bound <= tol * std::max(std::abs(acc), 1e-300) || bound <= 0.01 * round_err) {
      err = bound + round_err;
      break;
    }
    if (n > 2000000) {
      throw ConvergenceError("xi series: tolerance unreachable (ratio too close to 1)");
    }
  }
  return acc;
}

} // namespace bzeta::detail
