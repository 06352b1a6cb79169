#include "bzeta/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "bzeta/barnes.hpp"
#include "bzeta/bernoulli.hpp"
#include "bzeta/bilateral.hpp"
#include "bzeta/qprod.hpp"
#include "fourier_kernel.hpp"

namespace bzeta {

namespace {

struct Ctx {
  std::mt19937_64 rng;
  double tol;       // base tolerance
  double tol_fd;    // finite-difference tier
  std::vector<IdentityReport>* out;
  std::chrono::steady_clock::time_point stamp;

  double uniform(double a, double b) {
    return a + (b - a) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  }

  void add(const std::string& name, const std::string& params, cdouble lhs,
           cdouble rhs, double tol_eff) {
    IdentityReport r;
    r.name = name;
    r.params = params;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.rel_residual = (scale > 0.0) ? r.abs_residual / scale : 0.0;
    r.tol = tol_eff;
    r.pass = (r.rel_residual <= tol_eff) ||
             (r.abs_residual <= tol_eff && scale < 1.0);
    const auto now = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(now - stamp).count();
    stamp = now;
    out->push_back(std::move(r));
  }
};

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::string fmt_c(cdouble v) {
  return fmt("%.6g%+.6gi", v.real(), v.imag());
}

// Deterministic admissible samples: arguments separated by at least 0.25 rad
// (smaller gaps make the Fourier forms ill-conditioned), moduli in [0.6, 1.6].
std::vector<cdouble> sample_orc(Ctx& c, int r, double lo = 0.2,
                                double hi = kPi - 0.2) {
  const double span = std::max(hi - lo - 0.25 * (r - 1), 0.05);
  double a = lo + c.uniform(0.0, span / r);
  std::vector<cdouble> out;
  for (int i = 0; i < r; ++i) {
    out.push_back(std::polar(c.uniform(0.6, 1.6), a));
    a += 0.25 + c.uniform(0.0, span / r);
  }
  return out;
}

cdouble sample_cone(Ctx& c, const std::vector<cdouble>& ws) {
  cdouble z(0.0, 0.0);
  for (const cdouble& w : ws) z += c.uniform(0.12, 0.88) * w;
  return z;
}

cdouble sample_upper(Ctx& c, double lo = 0.25, double hi = kPi - 0.25) {
  return std::polar(c.uniform(0.5, 1.2), c.uniform(lo, hi));
}

const DirectedComplex kEpi = DirectedComplex::from_polar(1.0, kPi);

cdouble riemann_zeta_self(cdouble s) {
  // Self-hosted zeta(s) = zeta_1(s, 1 | 1) through the dispatcher.
  BarnesRequest rq{s, DirectedComplex::from_polar(1.0, 0.0),
                   ParameterVector::from_values({cdouble(1.0, 0.0)})};
  return barnes_zeta(rq, 1e-12).value;
}

cdouble fd5(const std::function<cdouble(double)>& f, double s0, double h) {
  return (8.0 * (f(s0 + h) - f(s0 - h)) - (f(s0 + 2.0 * h) - f(s0 - 2.0 * h))) /
         (12.0 * h);
}

// sum over n in Z \ {0} of n^{s-1} e^{2 pi i n z_k} prod_{j != k} (...)^{-1},
// assembled from the stabilized one-sided blocks.
cdouble bilateral_full_sum(cdouble s, const NormalizedParams& np, std::size_t r,
                           double tol, long& terms) {
  double e1 = 0.0, e2 = 0.0;
  const cdouble plus = detail::fourier_k_series(+1, s, np, r, tol, terms, e1);
  const cdouble minus = detail::fourier_k_series(-1, s, np, r, tol, terms, e2);
  // (-n)^{s-1} for integer s-1: (-1)^{s-1} with s = r - m style integers.
  const long p = std::lround(s.real() - 1.0);
  const double sgn = (((p % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
  return plus + sgn * minus;
}

// ---------------------------------------------------------------------------
// the catalog
// ---------------------------------------------------------------------------

void check_lipschitz(Ctx& c) {
  for (int i = 0; i < 4; ++i) {
    const cdouble z = sample_upper(c);
    const cdouble s(c.uniform(1.7, 3.9), c.uniform(-0.8, 0.8));
    const auto a = xi_series(BilateralRequest::make(s, DirectedComplex::from_principal(z),
                                                    kEpi, ParameterVector{}),
                             1e-12);
    const auto b = xi_fourier_normal(s, z, ParameterVector{}, 1e-13);
    c.add("lipschitz", fmt("s=%s;z=%s", fmt_c(s).c_str(), fmt_c(z).c_str()), a.value,
          b.value, c.tol);
  }
}

void check_fourier_xi(Ctx& c) {
  for (int r = 1; r <= 3; ++r) {
    for (int i = 0; i < 2; ++i) {
      const auto ws = sample_orc(c, r);
      const cdouble z = sample_upper(c);
      const cdouble s(static_cast<double>(r) + c.uniform(1.7, 3.9),
                      c.uniform(-0.8, 0.8));
      const auto a = xi_series(BilateralRequest::make(
                                   s, DirectedComplex::from_principal(z), kEpi,
                                   ParameterVector::from_values(ws)),
                               1e-12);
      const auto b = xi_fourier_normal(s, z, ParameterVector::from_values(ws), 1e-13);
      c.add("fourier-xi", fmt("r=%d;s=%s", r, fmt_c(s).c_str()), a.value, b.value,
            c.tol);
    }
  }
}

void check_xi_zero(Ctx& c) {
  const auto ws = sample_orc(c, 2);
  const cdouble z = sample_upper(c);
  auto wpv = ParameterVector::from_values(ws);
  for (int m = 1; m <= 5; ++m) {
    const auto v = xi_fourier_normal(cdouble(1.0 - m, 0.0), z, wpv, 1e-12);
    c.add("xi-zero", fmt("m=%d", m), v.value, cdouble(0.0, 0.0), c.tol);
  }
  // The finite-difference limit of the entire function reproduces the
  // derivative series.
  for (int m = 1; m <= 3; ++m) {
    const cdouble d = xi_deriv_nonpos(m, z, wpv, 1e-12);
    const cdouble fd = fd5(
        [&](double sv) { return xi_fourier_normal(cdouble(sv, 0.0), z, wpv, 1e-13).value; },
        1.0 - m, 1e-4);
    c.add("xi-zero", fmt("deriv;m=%d", m), fd, d, c.tol_fd);
  }
}

void check_qfact_deriv(Ctx& c) {
  for (int r = 1; r <= 3; ++r) {
    const auto ws = sample_orc(c, r);
    const cdouble z = sample_upper(c);
    const cdouble d = xi_deriv_nonpos(1, z, ParameterVector::from_values(ws), 1e-13);
    QData qd;
    qd.x = std::exp(cdouble(0.0, kTwoPi) * z);
    for (const cdouble& w : ws) qd.qs.push_back(std::exp(cdouble(0.0, kTwoPi) * w));
    const auto qp = qpoch_multi(qd, 1e-13);
    c.add("qfact-deriv", fmt("r=%d;z=%s", r, fmt_c(z).c_str()), std::exp(-d), qp.value,
          c.tol);
  }
}

void check_reflection(Ctx& c) {
  for (int r = 1; r <= 2; ++r) {
    const auto ws = sample_orc(c, r, 0.5, kPi - 0.5);
    for (double zr : {0.3, 0.5, 0.71}) {
      std::vector<DirectedComplex> up, down;
      up.push_back(DirectedComplex::from_polar(1.0, 0.0));
      down.push_back(DirectedComplex::from_polar(1.0, 0.0));
      for (const cdouble& w : ws) {
        up.push_back(DirectedComplex::from_principal(w));
        down.push_back(DirectedComplex::from_principal(w).rotated(-kPi));
      }
      const cdouble g1 =
          multiple_gamma(DirectedComplex::from_principal(cdouble(zr, 0.0)),
                         ParameterVector(up));
      const cdouble g2 =
          multiple_gamma(DirectedComplex::from_principal(cdouble(1.0 - zr, 0.0)),
                         ParameterVector(down));
      const cdouble lhs = 1.0 / (g1 * g2);

      const double sgn = ((r + 1) % 2 == 0) ? 1.0 : -1.0;
      double fact = 1.0;
      for (int i = 2; i <= r + 1; ++i) fact *= static_cast<double>(i);
      const cdouble phase =
          std::exp(cdouble(0.0, sgn * kPi / fact) *
                   multiple_bernoulli(r + 1, r + 1, cdouble(zr, 0.0),
                                      ParameterVector(up)));
      QData qd;
      qd.x = std::exp(cdouble(0.0, kTwoPi) * cdouble(zr, 0.0));
      for (const cdouble& w : ws) qd.qs.push_back(std::exp(cdouble(0.0, kTwoPi) * w));
      const cdouble rhs = phase * qpoch_multi(qd, 1e-13).value;
      c.add("reflection", fmt("r=%d;z=%.2f", r, zr), lhs, rhs, c.tol_fd);
    }
  }
}

void check_thm411(Ctx& c) {
  for (int r = 2; r <= 3; ++r) {
    for (int i = 0; i < 2; ++i) {
      const auto ws = sample_orc(c, r);
      auto wpv = ParameterVector::from_values(ws);
      const cdouble z = sample_cone(c, ws);
      const cdouble s(static_cast<double>(r) + c.uniform(1.6, 2.6),
                      c.uniform(-0.8, 0.8));
      cdouble wsum(0.0, 0.0);
      for (const cdouble& w : ws) wsum += w;
      const double sgn_r = (r % 2 == 0) ? -1.0 : 1.0; // (-1)^{r-1}

      BarnesRequest fa1{s, DirectedComplex::from_principal(-z),
                        wpv.neg_range(1, r, RotationDirection::down)};
      BarnesRequest fa2{s, DirectedComplex::from_principal(wsum - z), wpv};
      const cdouble fplus_def = barnes_zeta_direct(fa1, 1e-12).value +
                                sgn_r * barnes_zeta_direct(fa2, 1e-12).value;

      cdouble fplus_xi(0.0, 0.0);
      for (int k = 1; k <= r; ++k) {
        auto hatneg = wpv.neg_range(k, r, RotationDirection::down).hat(k);
        const cdouble zp = wpv.sum_range(1, k - 1) - z;
        const auto xp = xi(BilateralRequest::make(s, DirectedComplex::from_principal(zp),
                                                  wpv.at(k), hatneg),
                           1e-12);
        fplus_xi += ((k - 1) % 2 == 0 ? 1.0 : -1.0) * xp.value;
      }
      const auto fp = f_plus(s, z, wpv, 1e-12);
      c.add("thm411", fmt("r=%d;plus;def", r), fp.value, fplus_def, c.tol);
      c.add("thm411", fmt("r=%d;plus;xi-sum", r), fp.value, fplus_xi, c.tol);

      BarnesRequest fb1{s, DirectedComplex::from_principal(z), wpv};
      BarnesRequest fb2{s, DirectedComplex::from_principal(z - wsum),
                        wpv.neg_range(1, r, RotationDirection::down)};
      const cdouble fminus_def = barnes_zeta_direct(fb1, 1e-12).value +
                                 sgn_r * barnes_zeta_direct(fb2, 1e-12).value;
      cdouble fminus_xi(0.0, 0.0);
      for (int k = 1; k <= r; ++k) {
        auto hatneg = wpv.neg_range(k, r, RotationDirection::down).hat(k);
        const cdouble zm = z - wpv.sum_range(k + 1, r);
        const auto xm = xi(BilateralRequest::make(s, DirectedComplex::from_principal(zm),
                                                  wpv.at(k), hatneg),
                           1e-12);
        fminus_xi += ((r - k) % 2 == 0 ? 1.0 : -1.0) * xm.value;
      }
      const auto fm = f_minus(s, z, wpv, 1e-12);
      c.add("thm411", fmt("r=%d;minus;def", r), fm.value, fminus_def, c.tol);
      c.add("thm411", fmt("r=%d;minus;xi-sum", r), fm.value, fminus_xi, c.tol);

      // Below the series range the xi-sum still matches the Fourier form.
      const cdouble slow(c.uniform(-2.5, 1.2), c.uniform(-0.5, 0.5));
      cdouble fplus_xi_lo(0.0, 0.0);
      for (int k = 1; k <= r; ++k) {
        auto hatneg = wpv.neg_range(k, r, RotationDirection::down).hat(k);
        const cdouble zp = wpv.sum_range(1, k - 1) - z;
        const auto xp = xi(BilateralRequest::make(slow,
                                                  DirectedComplex::from_principal(zp),
                                                  wpv.at(k), hatneg),
                           1e-12);
        fplus_xi_lo += ((k - 1) % 2 == 0 ? 1.0 : -1.0) * xp.value;
      }
      const auto fp_lo = f_plus(slow, z, wpv, 1e-12);
      c.add("thm411", fmt("r=%d;plus;low-s", r), fp_lo.value, fplus_xi_lo, c.tol);
    }
  }
}

void check_eta(Ctx& c) {
  const cdouble taus[] = {cdouble(0.0, 1.0), cdouble(0.3, 1.2), cdouble(-0.4, 0.8),
                          cdouble(1.7, 0.6)};
  for (const cdouble& tau : taus) {
    const auto lhs = dedekind_eta(-1.0 / tau, 1e-14);
    const cdouble root = std::sqrt(tau / cdouble(0.0, 1.0));
    const auto rhs = root * dedekind_eta(tau, 1e-14).value;
    c.add("eta", fmt("tau=%s", fmt_c(tau).c_str()), lhs.value, rhs, c.tol);
  }
  // Fixed point at tau = i: the multiplier is exactly 1.
  const auto at_i = dedekind_eta(cdouble(0.0, 1.0), 1e-15);
  const auto inv_i = dedekind_eta(-1.0 / cdouble(0.0, 1.0), 1e-15);
  c.add("eta", "fixed-point", inv_i.value, at_i.value, c.tol);
}

void check_ramanujan(Ctx& c) {
  const cdouble taus[] = {cdouble(0.0, 1.0), cdouble(0.2, 1.1)};
  for (int N = 1; N <= 2; ++N) {
    for (const cdouble& tau : taus) {
      const cdouble zeta_odd = riemann_zeta_self(cdouble(2.0 * N + 1.0, 0.0));
      const cdouble lhs =
          0.5 * zeta_odd + lambert_sum_exp(-(2 * N + 1), tau, 1e-13).value;
      const cdouble rhs_sum =
          0.5 * zeta_odd + lambert_sum_exp(-(2 * N + 1), -1.0 / tau, 1e-13).value;
      cdouble tau2N(1.0, 0.0);
      for (int i = 0; i < 2 * N; ++i) tau2N *= tau;
      double fact = 1.0; // (2N+2)!
      for (int i = 2; i <= 2 * N + 2; ++i) fact *= static_cast<double>(i);
      cdouble i2pi_pow(1.0, 0.0); // (2 pi i)^{2N+1}
      for (int i = 0; i < 2 * N + 1; ++i) i2pi_pow *= cdouble(0.0, kTwoPi);
      const cdouble bterm =
          0.5 * i2pi_pow / fact *
          multiple_bernoulli(2, 2 + 2 * N, cdouble(0.0, 0.0),
                             ParameterVector::from_values({tau, cdouble(1.0, 0.0)}));
      const cdouble rhs = tau2N * rhs_sum + bterm;
      c.add("ramanujan", fmt("N=%d;tau=%s", N, fmt_c(tau).c_str()), lhs, rhs, c.tol);
    }
  }
}

void check_eisenstein(Ctx& c) {
  const cdouble taus[] = {cdouble(0.0, 1.0), cdouble(0.2, 1.1)};
  for (int N = 1; N <= 3; ++N) {
    for (const cdouble& tau : taus) {
      const double bq = bernoulli_number(2 * N) / (4.0 * N);
      const cdouble lhs = lambert_sum(N, -1.0 / tau, 1e-13).value - bq;
      cdouble tau2N(1.0, 0.0);
      for (int i = 0; i < 2 * N; ++i) tau2N *= tau;
      cdouble rhs = tau2N * (lambert_sum(N, tau, 1e-13).value - bq);
      if (N == 1) rhs -= tau / (4.0 * kPi * cdouble(0.0, 1.0));
      c.add("eisenstein", fmt("N=%d;tau=%s", N, fmt_c(tau).c_str()), lhs, rhs, c.tol);
    }
  }
}

void check_lemma51(Ctx& c) {
  const auto ws = sample_orc(c, 2, 0.35, kPi - 0.6);
  auto wpv = ParameterVector::from_values(ws);
  for (double sv : {2.5, 3.2, -0.7}) {
    const cdouble s(sv, 0.0);
    BarnesRequest a{s, DirectedComplex::from_principal(ws[0]), wpv};
    BarnesRequest b{s, DirectedComplex::from_principal(ws[1]), wpv};
    const cdouble lhs = barnes_zeta(a, 1e-12).value - barnes_zeta(b, 1e-12).value;
    const cdouble rhs = (cpow(DirectedComplex::from_principal(ws[0]), -s) -
                         cpow(DirectedComplex::from_principal(ws[1]), -s)) *
                        riemann_zeta_self(s);
    c.add("lemma51", fmt("part1;s=%.2f", sv), lhs, rhs, c.tol);
  }
  // (1 - e^{i pi s}) zeta_2(s, z | w1, w2) -> -pi i/(w1 w2) delta_{1,N}.
  const cdouble z = sample_cone(c, ws);
  for (int N = 1; N <= 2; ++N) {
    const double h = 1e-4;
    auto val = [&](double sv) {
      BarnesRequest rq{cdouble(sv, 0.0), DirectedComplex::from_principal(z), wpv};
      return (1.0 - std::exp(cdouble(0.0, kPi * sv))) * barnes_zeta(rq, 1e-12).value;
    };
    const cdouble lim = 0.5 * (val(2.0 * N + h) + val(2.0 * N - h));
    const cdouble expected = (N == 1)
                                 ? -cdouble(0.0, kPi) / (ws[0] * ws[1])
                                 : cdouble(0.0, 0.0);
    c.add("lemma51", fmt("part2;N=%d", N), lim, expected, c.tol_fd);
  }
}

void check_lemma52(Ctx& c) {
  const cdouble taus[] = {cdouble(0.25, 1.15), cdouble(-0.3, 0.85)};
  for (const cdouble& tau : taus) {
    // dg/ds(0): finite differences of g vs the closed form.
    const cdouble fd = fd5(
        [&](double sv) { return g_function(cdouble(sv, 0.0), tau, 1e-13).value; }, 0.0,
        1e-4);
    const cdouble closed0 = cdouble(0.0, -kPi / 4.0) +
                            cdouble(0.0, kPi / 12.0) * (tau + 1.0 / tau) +
                            0.5 * std::log(tau);
    c.add("lemma52", fmt("dg(0);tau=%s", fmt_c(tau).c_str()), fd, closed0, c.tol_fd);

    // dg/ds(-2N) against the Bernoulli/zeta closed form, N = 1.
    const int N = 1;
    const cdouble fd2 = fd5(
        [&](double sv) { return g_function(cdouble(sv, 0.0), tau, 1e-13).value; },
        -2.0 * N, 1e-4);
    double fact = 1.0; // (2N)!
    for (int i = 2; i <= 2 * N; ++i) fact *= static_cast<double>(i);
    cdouble tau2N(1.0, 0.0);
    for (int i = 0; i < 2 * N; ++i) tau2N *= tau;
    const cdouble closed2 =
        cdouble(0.0, kPi) *
            multiple_bernoulli(2, 2 + 2 * N, cdouble(0.0, 0.0),
                               ParameterVector::from_values({cdouble(1.0, 0.0), tau})) /
            static_cast<double>((2 * N + 2) * (2 * N + 1)) +
        0.5 * (N % 2 == 0 ? 1.0 : -1.0) * (tau2N - 1.0) * fact *
            std::pow(kTwoPi, -2.0 * N) *
            riemann_zeta_self(cdouble(2.0 * N + 1.0, 0.0));
    c.add("lemma52", fmt("dg(-2);tau=%s", fmt_c(tau).c_str()), fd2, closed2, c.tol_fd);

    // g(2N) value identities, N = 1, 2.
    for (int M = 1; M <= 2; ++M) {
      const auto g = g_function(cdouble(2.0 * M, 0.0), tau, 1e-13);
      double f2m = 1.0; // (2M)!
      for (int i = 2; i <= 2 * M; ++i) f2m *= static_cast<double>(i);
      cdouble i2pi_pow(1.0, 0.0);
      for (int i = 0; i < 2 * M; ++i) i2pi_pow *= cdouble(0.0, kTwoPi);
      cdouble tau_m2M(1.0, 0.0);
      for (int i = 0; i < 2 * M; ++i) tau_m2M /= tau;
      cdouble rhs = (tau_m2M - 1.0) *
                    (-0.5 * bernoulli_number(2 * M) / f2m * i2pi_pow);
      if (M == 1) rhs += cdouble(0.0, kPi) / tau;
      c.add("lemma52", fmt("g(%d);tau=%s", 2 * M, fmt_c(tau).c_str()), g.value, rhs,
            c.tol);
    }
  }
}

void check_barnes_fourier(Ctx& c) {
  for (int r = 2; r <= 3; ++r) {
    for (int i = 0; i < 2; ++i) {
      const auto ws = sample_orc(c, r);
      auto wpv = ParameterVector::from_values(ws);
      const cdouble z = sample_cone(c, ws);
      cdouble s(static_cast<double>(r) + 0.6 + c.uniform(0.1, 2.3),
                c.uniform(-0.8, 0.8));
      if (std::abs(s.real() - std::round(s.real())) < 0.05) s += 0.07;
      BarnesRequest rq{s, DirectedComplex::from_principal(z), wpv};
      const auto f = barnes_zeta_fourier(rq, 1e-12);
      const auto d = barnes_zeta_direct(rq, 1e-11);
      c.add("barnes-fourier", fmt("r=%d;s=%s", r, fmt_c(s).c_str()), f.value, d.value,
            c.tol);
      // The expansion evaluated at s = 1-m against the closed special value.
      for (int m = 1; m <= 3; ++m) {
        BarnesRequest rq2{cdouble(1.0 - m, 0.0), DirectedComplex::from_principal(z), wpv};
        const auto fe = barnes_zeta_fourier(rq2, 1e-12);
        const cdouble sv = barnes_special_value(m, z, wpv);
        c.add("barnes-fourier", fmt("r=%d;m=%d;special", r, m), fe.value, sv, c.tol);
      }
    }
  }
}

void check_hurwitz_fe(Ctx& c) {
  for (int i = 0; i < 3; ++i) {
    const cdouble w = std::polar(c.uniform(0.7, 1.4), c.uniform(0.3, 2.6));
    const double a = c.uniform(0.15, 0.85);
    const cdouble s(c.uniform(-2.8, -1.0), c.uniform(-0.4, 0.4));
    BarnesRequest rq{s, DirectedComplex::from_principal(a * w),
                     ParameterVector::from_values({w})};
    const auto lhs = barnes_zeta_em(rq, 1e-12);
    const auto rhs = barnes_zeta_fourier(rq, 0.02 * c.tol);
    c.add("hurwitz-fe", fmt("a=%.3f;s=%s", a, fmt_c(s).c_str()), lhs.value, rhs.value,
          c.tol);
  }
}

// Symmetric partial sums of sum_{n != 0} e^{2 pi i n a} / n with iterated
// Cesaro smoothing for the conditionally convergent edge.
cdouble symmetric_log_sum(double a, long N) {
  cdouble acc(0.0, 0.0);
  cdouble tail_avg(0.0, 0.0);
  const long W = N / 2;
  for (long n = 1; n <= N; ++n) {
    const double t = kTwoPi * a * static_cast<double>(n);
    const cdouble e(std::cos(t), std::sin(t));
    acc += (e - std::conj(e)) / static_cast<double>(n);
    if (n > N - W) tail_avg += acc;
  }
  return tail_avg / static_cast<double>(W);
}

void check_bernoulli_fourier(Ctx& c) {
  // r = 1, m = 1: the classical conditionally convergent edge, summed with
  // symmetric partial sums.
  {
    const cdouble w = std::polar(c.uniform(0.8, 1.3), c.uniform(0.4, 2.4));
    const double a = c.uniform(0.2, 0.8);
    const cdouble lhs = multiple_bernoulli(1, 1, a * w, ParameterVector::from_values({w}));
    // B_{1,1}(z|w) = -(1!/(2 pi i)^1) w^0 sum_{n != 0} e^{2 pi i n a} / n.
    const cdouble rhs = -symmetric_log_sum(a, 40000) / cdouble(0.0, kTwoPi);
    c.add("bernoulli-fourier", fmt("r=1;m=1;a=%.3f", a), lhs, rhs, c.tol);
  }
  // r = 1, m >= 2 and r in {2,3}: absolutely/geometrically convergent forms.
  for (int r = 1; r <= 3; ++r) {
    const auto ws = sample_orc(c, r);
    auto wpv = ParameterVector::from_values(ws);
    const cdouble z = sample_cone(c, ws);
    for (int m = (r == 1 ? 2 : 0); m <= (r == 1 ? 3 : 2); ++m) {
      const cdouble lhs = multiple_bernoulli(r, m, z, wpv);
      cdouble sum(0.0, 0.0);
      long terms = 0;
      const cdouble seff(static_cast<double>(r - m), 0.0); // n^{s-1} = n^{r-1-m}
      for (int k = 1; k <= r; ++k) {
        const auto np = normalize(DirectedComplex::from_principal(z), wpv, k);
        cdouble wk_pow(1.0, 0.0); // omega_k^{m-r}
        for (int i = 0; i < r - m; ++i) wk_pow /= ws[k - 1];
        for (int i = 0; i < m - r; ++i) wk_pow *= ws[k - 1];
        sum += wk_pow * bilateral_full_sum(seff, np, r,
                                           r == 1 ? 0.02 * c.tol : 1e-11, terms);
      }
      const double sgn_r = (r % 2 == 0) ? 1.0 : -1.0;
      double mfact = 1.0;
      for (int i = 2; i <= m; ++i) mfact *= static_cast<double>(i);
      cdouble pref(1.0, 0.0); // (2 pi i)^{r-1-m}
      for (int i = 0; i < r - 1 - m; ++i) pref *= cdouble(0.0, kTwoPi);
      for (int i = 0; i < m + 1 - r; ++i) pref /= cdouble(0.0, kTwoPi);
      const cdouble rhs = sgn_r * pref * mfact * sum;
      c.add("bernoulli-fourier", fmt("r=%d;m=%d", r, m), lhs, rhs, c.tol);
    }
  }
}

void check_bernoulli_vanish(Ctx& c) {
  for (int r = 2; r <= 3; ++r) {
    const auto ws = sample_orc(c, r);
    auto wpv = ParameterVector::from_values(ws);
    const cdouble z = sample_cone(c, ws);
    for (int m = 1; m <= 2; ++m) {
      cdouble sum(0.0, 0.0);
      long terms = 0;
      const cdouble seff(static_cast<double>(r + m), 0.0); // n^{s-1} = n^{r+m-1}
      for (int k = 1; k <= r; ++k) {
        const auto np = normalize(DirectedComplex::from_principal(z), wpv, k);
        cdouble wk_pow(1.0, 0.0); // omega_k^{-(r+m)}
        for (int i = 0; i < r + m; ++i) wk_pow /= ws[k - 1];
        sum += wk_pow * bilateral_full_sum(seff, np, r, 1e-11, terms);
      }
      c.add("bernoulli-vanish", fmt("r=%d;m=%d", r, m), sum, cdouble(0.0, 0.0),
            c.tol);
    }
  }
}

void check_iseki(Ctx& c) {
  for (int r = 2; r <= 3; ++r) {
    const auto ws = sample_orc(c, r);
    auto wpv = ParameterVector::from_values(ws);
    const cdouble z = sample_cone(c, ws);
    cdouble wsum(0.0, 0.0);
    for (const cdouble& w : ws) wsum += w;
    const double sgn_r = (r % 2 == 0) ? 1.0 : -1.0; // (-1)^r
    double rfact = 1.0;
    for (int i = 2; i <= r; ++i) rfact *= static_cast<double>(i);
    const cdouble brr = multiple_bernoulli(r, r, z, wpv);

    // N = 0: the two product forms of the transformation formula.
    const cdouble lhs0 = std::exp(cdouble(0.0, sgn_r * kPi / rfact) * brr) *
                         iseki_product(+1, z, wpv, 1e-13).value;
    const cdouble rhs0 = std::exp(cdouble(0.0, -sgn_r * kPi / rfact) * brr) *
                         iseki_product(-1, z, wpv, 1e-13).value;
    c.add("iseki", fmt("r=%d;N=0;products", r), lhs0, rhs0, c.tol);

    // N = 1: derivative form against finite differences of
    // f(s) = zeta_r(s, z) + (-1)^{r-1} zeta_r(s, |w|+ - z).
    const int N = 1;
    auto fcomb = [&](double sv) {
      BarnesRequest r1{cdouble(sv, 0.0), DirectedComplex::from_principal(z), wpv};
      BarnesRequest r2{cdouble(sv, 0.0), DirectedComplex::from_principal(wsum - z), wpv};
      return barnes_zeta(r1, 1e-12).value -
             sgn_r * barnes_zeta(r2, 1e-12).value; // (-1)^{r-1} = -(-1)^r
    };
    const cdouble fd = fd5(fcomb, -2.0 * N, 1e-3);
    double f2N = 1.0;
    for (int i = 2; i <= 2 * N; ++i) f2N *= static_cast<double>(i);
    double fr2N = f2N;
    for (int i = 2 * N + 1; i <= 2 * N + r; ++i) fr2N *= static_cast<double>(i);
    const cdouble bterm = (2.0 * N == 0 ? brr
                                        : multiple_bernoulli(r, r + 2 * N, z, wpv)) *
                          (f2N / fr2N) * kPi;
    const cdouble plus_form = cdouble(0.0, -sgn_r) * bterm +
                              f_deriv_nonpos(+1, 2 * N, z, wpv, 1e-12);
    const cdouble minus_form = cdouble(0.0, sgn_r) * bterm +
                               f_deriv_nonpos(-1, 2 * N, z, wpv, 1e-12);
    c.add("iseki", fmt("r=%d;N=1;plus", r), fd, plus_form, c.tol_fd);
    c.add("iseki", fmt("r=%d;N=1;minus", r), fd, minus_form, c.tol_fd);
    c.add("iseki", fmt("r=%d;N=1;series", r), plus_form, minus_form, c.tol);
  }
}

void check_bernoulli_lemma36(Ctx& c) {
  for (int trial = 0; trial < 8; ++trial) {
    const int r = 1 + trial % 4;
    const int n = 1 + (trial * 3) % 8;
    std::vector<cdouble> ws;
    for (int i = 0; i < r; ++i) {
      ws.emplace_back(c.uniform(0.4, 1.6), c.uniform(0.3, 1.4));
    }
    auto w = ParameterVector::from_values(ws);
    const cdouble z(c.uniform(-1.5, 1.5), c.uniform(-1.5, 1.5));
    const int j = 1 + trial % r;
    const cdouble wj = ws[j - 1];
    const std::string tag = fmt("r=%d;n=%d", r, n);

    const cdouble cc(c.uniform(0.5, 2.0), c.uniform(-0.5, 0.5));
    std::vector<cdouble> cw;
    for (const auto& v : ws) cw.push_back(cc * v);
    c.add("bernoulli-lemma36", tag + ";homogeneity",
          multiple_bernoulli(r, n, cc * z, ParameterVector::from_values(cw)),
          std::pow(cc, cdouble(n - r, 0.0)) * multiple_bernoulli(r, n, z, w), c.tol);

    cdouble wsum(0.0, 0.0);
    for (const auto& v : ws) wsum += v;
    c.add("bernoulli-lemma36", tag + ";reflection",
          multiple_bernoulli(r, n, wsum - z, w),
          (n % 2 == 0 ? 1.0 : -1.0) * multiple_bernoulli(r, n, z, w), c.tol);

    c.add("bernoulli-lemma36", tag + ";difference",
          multiple_bernoulli(r, n, z + wj, w) - multiple_bernoulli(r, n, z, w),
          static_cast<double>(n) * multiple_bernoulli(r - 1, n - 1, z, w.hat(j)),
          c.tol);

    std::vector<cdouble> wneg = ws;
    wneg[j - 1] = -wneg[j - 1];
    auto wn = ParameterVector::from_values(wneg);
    c.add("bernoulli-lemma36", tag + ";negation", multiple_bernoulli(r, n, z, wn),
          -multiple_bernoulli(r, n, z + wj, w), c.tol);

    c.add("bernoulli-lemma36", tag + ";sum-rule",
          multiple_bernoulli(r, n, z, w) + multiple_bernoulli(r, n, z, wn),
          -static_cast<double>(n) * multiple_bernoulli(r - 1, n - 1, z, w.hat(j)),
          c.tol);

    const auto p = multiple_bernoulli_poly(r, n, w);
    cdouble dz(0.0, 0.0), rhs_d(0.0, 0.0);
    for (int i = 1; i <= n; ++i) {
      dz += static_cast<double>(i) * p.coeffs_in_z[i] * std::pow(z, i - 1);
    }
    rhs_d = static_cast<double>(n) * multiple_bernoulli(r, n - 1, z, w);
    c.add("bernoulli-lemma36", tag + ";derivative", dz, rhs_d, c.tol);
  }
}

void check_homogeneity_shift(Ctx& c) {
  // Lemma 3.1 (homogeneity) and Lemma 3.2 (shift) for the Barnes zeta.
  for (int r = 1; r <= 3; ++r) {
    const auto ws = sample_orc(c, r);
    auto wpv = ParameterVector::from_values(ws);
    const cdouble z = sample_cone(c, ws);
    cdouble s(c.uniform(-1.5, 2.5) + static_cast<double>(r), c.uniform(-0.8, 0.8));
    if (std::abs(s.real() - std::round(s.real())) < 0.05) s += 0.07;

    const double theta = c.uniform(-0.15, 0.3);
    const auto alpha = DirectedComplex::from_polar(1.0, theta);
    std::vector<cdouble> wrot;
    for (const auto& v : ws) wrot.push_back(v * alpha.value());
    BarnesRequest lr{s, DirectedComplex::from_principal(z).times(alpha),
                     ParameterVector::from_values(wrot)};
    BarnesRequest rr{s, DirectedComplex::from_principal(z), wpv};
    c.add("homogeneity-shift", fmt("barnes;r=%d;theta=%.3f", r, theta),
          barnes_zeta(lr, 1e-12).value,
          cpow(alpha, -s) * barnes_zeta(rr, 1e-12).value, c.tol);

    const int k = 1 + static_cast<int>(c.uniform(0.0, static_cast<double>(r) - 1e-9));
    BarnesRequest sr{s, DirectedComplex::from_principal(z + ws[k - 1]), wpv};
    BarnesRequest hr{s, DirectedComplex::from_principal(z), wpv.hat(k)};
    c.add("homogeneity-shift", fmt("shift;r=%d;k=%d", r, k),
          barnes_zeta(sr, 1e-12).value + barnes_zeta(hr, 1e-12).value,
          barnes_zeta(rr, 1e-12).value, c.tol);
  }
  // Lemma 4.3 / 4.4 for the bilateral zeta.
  {
    const auto ws = sample_orc(c, 2);
    const cdouble z = sample_upper(c);
    const cdouble s(4.2, c.uniform(-0.5, 0.5));
    const auto base = xi_series(BilateralRequest::make(
                                    s, DirectedComplex::from_principal(z), kEpi,
                                    ParameterVector::from_values(ws)),
                                1e-12);
    const auto per = xi_series(BilateralRequest::make(
                                   s, DirectedComplex::from_principal(z - 1.0), kEpi,
                                   ParameterVector::from_values(ws)),
                               1e-12);
    c.add("homogeneity-shift", "bilateral;periodicity", per.value, base.value, c.tol);

    const auto up = xi_series(BilateralRequest::make(
                                  s, DirectedComplex::from_principal(z + ws[0]), kEpi,
                                  ParameterVector::from_values(ws)),
                              1e-12);
    const auto drop = xi_series(BilateralRequest::make(
                                    s, DirectedComplex::from_principal(z), kEpi,
                                    ParameterVector::from_values({ws[1]})),
                                1e-12);
    c.add("homogeneity-shift", "bilateral;shift", up.value,
          base.value - drop.value, c.tol);
  }
}

struct Suite {
  const char* name;
  void (*run)(Ctx&);
};

constexpr Suite kSuites[] = {
    {"lipschitz", check_lipschitz},
    {"fourier-xi", check_fourier_xi},
    {"xi-zero", check_xi_zero},
    {"qfact-deriv", check_qfact_deriv},
    {"reflection", check_reflection},
    {"thm411", check_thm411},
    {"eta", check_eta},
    {"ramanujan", check_ramanujan},
    {"eisenstein", check_eisenstein},
    {"lemma51", check_lemma51},
    {"lemma52", check_lemma52},
    {"barnes-fourier", check_barnes_fourier},
    {"hurwitz-fe", check_hurwitz_fe},
    {"bernoulli-fourier", check_bernoulli_fourier},
    {"bernoulli-vanish", check_bernoulli_vanish},
    {"iseki", check_iseki},
    {"bernoulli-lemma36", check_bernoulli_lemma36},
    {"homogeneity-shift", check_homogeneity_shift},
};

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Suite& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

std::vector<IdentityReport> run_suite(const VerifyConfig& cfg) {
  std::vector<const Suite*> selected;
  if (cfg.suites.empty()) {
    for (const Suite& s : kSuites) selected.push_back(&s);
  } else {
    for (const std::string& want : cfg.suites) {
      const Suite* found = nullptr;
      for (const Suite& s : kSuites) {
        if (want == s.name) {
          found = &s;
          break;
        }
      }
      if (!found) throw RangeError("run_suite: unknown suite '" + want + "'");
      selected.push_back(found);
    }
  }

  std::vector<IdentityReport> out;
  for (const Suite* s : selected) {
    Ctx ctx{std::mt19937_64(cfg.seed ^ std::hash<std::string>{}(s->name)), cfg.tol,
            std::max(cfg.tol, 1e-6), &out, std::chrono::steady_clock::now()};
    s->run(ctx);
  }
  return out;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

std::string report_json_line(const IdentityReport& r, bool timings) {
  std::string s = "{\"name\":\"" + r.name + "\",\"params\":\"" + r.params + "\"";
  s += ",\"lhs\":{\"re\":" + num(r.lhs.real()) + ",\"im\":" + num(r.lhs.imag()) + "}";
  s += ",\"rhs\":{\"re\":" + num(r.rhs.real()) + ",\"im\":" + num(r.rhs.imag()) + "}";
  s += ",\"abs_residual\":" + num(r.abs_residual);
  s += ",\"rel_residual\":" + num(r.rel_residual);
  s += ",\"tol\":" + num(r.tol);
  s += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  s += ",\"elapsed_ms\":" + num(timings ? r.elapsed_ms : 0.0);
  s += "}";
  return s;
}

std::string report_csv_header() {
  return "name,abs_residual,rel_residual,tol,pass,elapsed_ms";
}

std::string report_csv_row(const IdentityReport& r, bool timings) {
  return r.name + "," + num(r.abs_residual) + "," + num(r.rel_residual) + "," +
         num(r.tol) + "," + (r.pass ? "true" : "false") + "," +
         num(timings ? r.elapsed_ms : 0.0);
}

std::string report_text_line(const IdentityReport& r, bool timings) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%s] %-18s %-24s rel=%.3e abs=%.3e tol=%.1e",
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.params.c_str(),
                r.rel_residual, r.abs_residual, r.tol);
  std::string s = buf;
  if (timings) {
    std::snprintf(buf, sizeof buf, " (%.1f ms)", r.elapsed_ms);
    s += buf;
  }
  return s;
}

} // namespace bzeta
