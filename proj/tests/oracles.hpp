#pragma once

// Test-only reference computations, independent of the library's evaluation
// paths: brute-force lattice sums, classical zeta values through the
// functional equation, finite differences, and a grid membership oracle.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "bzeta/dcx.hpp"
#include "bzeta/params.hpp"

namespace oracle {

using bzeta::cdouble;
using bzeta::kPi;
using bzeta::kTwoPi;

// sum over m in N0^r, |m|_1 <= Mmax, of (z + m.omega)^{-s} with principal
// arguments.
inline cdouble brute_lattice_sum(cdouble s, cdouble z,
                                 const std::vector<cdouble>& omegas, long Mmax) {
  cdouble acc(0.0, 0.0);
  std::function<void(std::size_t, long, cdouble)> rec =
      [&](std::size_t level, long remaining, cdouble base) {
        if (level + 1 == omegas.size()) {
          acc += std::exp(
              -s * std::log(base + static_cast<double>(remaining) * omegas[level]));
          return;
        }
        for (long m = 0; m <= remaining; ++m) {
          rec(level + 1, remaining - m, base + static_cast<double>(m) * omegas[level]);
        }
      };
  if (omegas.empty()) {
    return std::exp(-s * std::log(z));
  }
  for (long M = 0; M <= Mmax; ++M) rec(0, M, z);
  return acc;
}

// Riemann zeta for real sigma > 1: truncated sum plus integral and midpoint
// corrections; error is O(N^{-sigma-1}).
inline double riemann_zeta_gt1(double sigma, long N = 200000) {
  double acc = 0.0;
  for (long n = 1; n < N; ++n) acc += std::pow(static_cast<double>(n), -sigma);
  const double dN = static_cast<double>(N);
  acc += std::pow(dN, 1.0 - sigma) / (sigma - 1.0) + 0.5 * std::pow(dN, -sigma);
  acc += sigma * std::pow(dN, -sigma - 1.0) / 12.0;
  return acc;
}

// Riemann zeta at real s < 0 through the functional equation
//   zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s).
inline double riemann_zeta_neg(double s) {
  return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
         std::tgamma(1.0 - s) * riemann_zeta_gt1(1.0 - s);
}

// 5-point central difference with Richardson weights.
inline cdouble fd_deriv(const std::function<cdouble(double)>& f, double s0, double h) {
  return (8.0 * (f(s0 + h) - f(s0 - h)) - (f(s0 + 2.0 * h) - f(s0 - 2.0 * h))) /
         (12.0 * h);
}

// Exact membership for r = 2 (the generators always span the plane), used as
// the cone oracle backbone.
inline bool cone_membership_2(cdouble z, cdouble w1, cdouble w2, double& mindist) {
  const double det = w1.real() * w2.imag() - w1.imag() * w2.real();
  const double a1 = (z.real() * w2.imag() - z.imag() * w2.real()) / det;
  const double a2 = (w1.real() * z.imag() - w1.imag() * z.real()) / det;
  mindist = std::min(std::min(a1, 1.0 - a1), std::min(a2, 1.0 - a2));
  return a1 > 0.0 && a1 < 1.0 && a2 > 0.0 && a2 < 1.0;
}

// Grid-search membership oracle for r in {1,2,3}: scans the first coefficient
// on a grid (resolution 1/200) and solves the rest exactly.  Returns 1/0 for
// a confident classification and -1 when the sample is too close to the
// boundary to classify at this resolution.
inline int cone_grid_oracle(cdouble z, const std::vector<cdouble>& w) {
  const double h = 1.0 / 200.0;
  if (w.size() == 1) {
    const double n2 = std::norm(w[0]);
    const double a = (z.real() * w[0].real() + z.imag() * w[0].imag()) / n2;
    const double perp = std::abs(z - a * w[0]) / std::abs(w[0]);
    if (perp > 1e-9) return 0;
    if (a > h && a < 1.0 - h) return 1;
    if (a < -h || a > 1.0 + h) return 0;
    return -1;
  }
  if (w.size() == 2) {
    double d = 0.0;
    const bool in = cone_membership_2(z, w[0], w[1], d);
    if (std::abs(d) < 1e-9) return -1;
    return in ? 1 : 0;
  }
  // r = 3
  bool found = false;
  double best = -1e9;
  for (int i = 0; i <= 200; ++i) {
    const double a1 = h * static_cast<double>(i);
    double d = 0.0;
    const bool in = cone_membership_2(z - a1 * w[0], w[1], w[2], d);
    const double score = std::min(d, std::min(a1, 1.0 - a1));
    best = std::max(best, score);
    if (in && a1 > 0.0 && a1 < 1.0 && score > 2.0 * h) found = true;
  }
  if (found) return 1;
  if (best < -2.0 * h) return 0;
  return -1;
}

// Deterministic sampling helpers.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}
  double uniform(double a, double b) {
    return a + (b - a) * std::uniform_real_distribution<double>(0.0, 1.0)(eng);
  }
  cdouble upper_half(double amin, double amax, double mmin, double mmax) {
    const double arg = uniform(amin, amax);
    const double mod = uniform(mmin, mmax);
    return std::polar(mod, arg);
  }
};

// Omegas in the upper half-plane with strictly increasing arguments separated
// by at least `gap` radians (small gaps make the Fourier forms ill-conditioned).
inline std::vector<cdouble> orc_sample(Rng& rng, int r, double lo = 0.15,
                                       double hi = kPi - 0.15, double gap = 0.22) {
  const double span = hi - lo - gap * (r - 1);
  double a = lo + rng.uniform(0.0, std::max(span, 0.01) / r);
  std::vector<cdouble> out;
  for (int i = 0; i < r; ++i) {
    out.push_back(std::polar(rng.uniform(0.6, 1.6), a));
    a += gap + rng.uniform(0.0, std::max(span, 0.01) / r);
  }
  return out;
}

// A point well inside the cone D of the given generators.
inline cdouble cone_point(Rng& rng, const std::vector<cdouble>& w, double margin = 0.15) {
  cdouble z(0.0, 0.0);
  for (const cdouble& g : w) z += rng.uniform(margin, 1.0 - margin) * g;
  return z;
}

} // namespace oracle
