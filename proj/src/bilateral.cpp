#include "bzeta/bilateral.hpp"

#include <algorithm>
#include <cmath>

#include "fourier_kernel.hpp"

namespace bzeta {

namespace {

bool near_nonpositive_one_minus_m(cdouble s, long& m_out) {
  if (std::abs(s.imag()) > kIntegerEps) return false;
  const double rounded = std::round(s.real());
  if (std::abs(s.real() - rounded) > kIntegerEps) return false;
  if (rounded > 0.0) return false;
  m_out = 1 - static_cast<long>(rounded); // s = 1 - m
  return true;
}

bool in_open_upper_half(double principal_arg) {
  return principal_arg > 0.0 && principal_arg < kPi;
}

cdouble int_pow(cdouble w, int p) {
  cdouble acc(1.0, 0.0);
  for (int i = 0; i < p; ++i) acc *= w;
  return acc;
}

} // namespace

BilateralRequest BilateralRequest::make(cdouble s, const DirectedComplex& z,
                                        const DirectedComplex& omega0,
                                        const ParameterVector& omegas) {
  if (!check_soc(z, omega0, omegas)) {
    throw DomainError("BilateralRequest: strong one-side condition violated");
  }
  return BilateralRequest{s, z, omega0, omegas};
}

EvalResult xi_series(const BilateralRequest& req, double tol) {
  const std::size_t r = req.omegas.size();
  if (!(req.s.real() > static_cast<double>(r) + 1.5)) {
    throw ConvergenceError("xi_series: Re(s) must exceed r + 1.5");
  }
  if (!check_soc(req.z, req.omega0, req.omegas)) {
    throw DomainError("xi_series: strong one-side condition violated");
  }

  BarnesRequest up{req.s,
                   DirectedComplex::from_principal(req.z.value() + req.omega0.value()),
                   req.omegas.prepended(req.omega0)};
  BarnesRequest down{req.s, req.z, req.omegas.prepended(req.omega0.rotated(-kPi))};

  const EvalResult a = barnes_zeta_direct(up, tol / 2.0);
  const EvalResult b = barnes_zeta_direct(down, tol / 2.0);
  const Method m = (a.method == Method::direct && b.method == Method::direct)
                       ? Method::direct
                       : Method::reduction;
  return {a.value + b.value, a.err_estimate + b.err_estimate,
          a.terms_used + b.terms_used, m};
}

EvalResult xi_fourier_normal(cdouble s, cdouble z, const ParameterVector& omegas,
                             double tol) {
  if (!(z.imag() > 0.0)) {
    throw DomainError("xi_fourier_normal: z must lie in the open upper half-plane");
  }
  for (const auto& w : omegas.entries()) {
    if (!in_open_upper_half(w.principal_argument())) {
      throw DomainError("xi_fourier_normal: omegas must lie in the open upper half-plane");
    }
  }
  long m = 0;
  if (near_nonpositive_one_minus_m(s, m)) {
    // 1/Gamma(s) vanishes; the function is entire, so the value is exactly 0.
    return {cdouble(0.0, 0.0), 0.0, 0, Method::fourier};
  }
  long terms = 0;
  double err = 0.0;
  const cdouble pref = std::exp(cdouble(0.0, -kPi / 2.0) * s) *
                       std::pow(cdouble(kTwoPi, 0.0), s) * recip_gamma(s);
  const cdouble series = detail::xi_normal_series(
      s, z, omegas.values(), tol / std::max(1.0, std::abs(pref)), terms, err);
  return {pref * series, std::abs(pref) * err, terms, Method::fourier};
}

EvalResult xi(const BilateralRequest& req, double tol) {
  if (!check_soc(req.z, req.omega0, req.omegas)) {
    throw DomainError("xi: strong one-side condition violated");
  }
  // alpha = e^{pi i} / omega0 maps the data to the normalized frame.
  const DirectedComplex alpha = DirectedComplex::from_polar(1.0, kPi).over(req.omega0);
  const DirectedComplex zn = req.z.times(alpha);
  bool fourier_ok = in_open_upper_half(zn.principal_argument());
  std::vector<DirectedComplex> wn;
  wn.reserve(req.omegas.size());
  for (const auto& w : req.omegas.entries()) {
    const DirectedComplex v = w.times(alpha);
    fourier_ok = fourier_ok && in_open_upper_half(v.principal_argument());
    wn.push_back(v);
  }
  if (fourier_ok) {
    const EvalResult base =
        xi_fourier_normal(req.s, zn.value(), ParameterVector(std::move(wn)), tol);
    const cdouble undo = cpow(alpha, req.s);
    // xi(s, z | omega0; omega) = alpha^s xi(s, alpha z | e^{pi i}; alpha omega).
    return {undo * base.value, std::abs(undo) * base.err_estimate, base.terms_used,
            Method::fourier};
  }
  return xi_series(req, tol);
}

cdouble xi_deriv_nonpos(int m, cdouble z, const ParameterVector& omegas, double tol) {
  if (m < 1) throw RangeError("xi_deriv_nonpos: m must be >= 1");
  long terms = 0;
  double err = 0.0;
  const cdouble s = cdouble(1.0 - static_cast<double>(m), 0.0);
  const cdouble series = detail::xi_normal_series(s, z, omegas.values(), tol, terms, err);
  double fact = 1.0;
  for (int i = 2; i <= m - 1; ++i) fact *= static_cast<double>(i);
  return fact / int_pow(cdouble(0.0, kTwoPi), m - 1) * series;
}

namespace {

void require_f_domain(int sign, cdouble s, cdouble z, const ParameterVector& omegas) {
  if (omegas.empty()) throw DomainError("f series: at least one omega required");
  for (const auto& w : omegas.entries()) {
    if (!in_open_upper_half(w.principal_argument())) {
      throw DomainError("f series: omegas must lie in the open upper half-plane");
    }
  }
  if (!check_orc(omegas)) {
    throw DomainError("f series: order condition violated");
  }
  bool in_sector = (sign > 0) ? in_sector_Dplus(z, omegas) : in_sector_Dminus(z, omegas);
  if (in_sector) return;
  bool in_D = false;
  try {
    in_D = in_cone_D(z, omegas);
  } catch (const BoundaryError&) {
    in_D = false;
  }
  if (in_D) {
    // For r = 1 the cone is the segment (0,1) omega_1 and the series sit on
    // their boundary of convergence; only Re(s) < 0 is admitted there.
    if (omegas.size() == 1 && !(s.real() < -0.1)) {
      throw DomainError("f series: r = 1 with z in D needs Re(s) < 0");
    }
    return;
  }
  throw DomainError("f series: z outside the admissible region");
}

EvalResult f_one_sided(int sign, cdouble s, cdouble z, const ParameterVector& omegas,
                       double tol) {
  require_f_domain(sign, s, z, omegas);
  long m = 0;
  if (near_nonpositive_one_minus_m(s, m)) {
    return {cdouble(0.0, 0.0), 0.0, 0, Method::fourier};
  }
  const std::size_t r = omegas.size();
  const DirectedComplex zd = DirectedComplex::from_principal(z);
  const cdouble pref = std::exp(cdouble(0.0, kPi / 2.0) * s) *
                       std::pow(cdouble(kTwoPi, 0.0), s) * recip_gamma(s);
  cdouble acc(0.0, 0.0);
  long terms = 0;
  double err = 0.0;
  for (std::size_t k = 1; k <= r; ++k) {
    const NormalizedParams np = normalize(zd, omegas, k);
    const cdouble wk_pow = cpow(omegas.at(k), -s);
    const double tol_k = tol / (static_cast<double>(r) *
                                std::max(1.0, std::abs(pref) * std::abs(wk_pow)));
    double ek = 0.0;
    acc += wk_pow * detail::fourier_k_series(sign, s, np, r, tol_k, terms, ek);
    err += std::abs(wk_pow) * ek;
  }
  return {pref * acc, std::abs(pref) * err, terms, Method::fourier};
}

} // namespace

EvalResult f_plus(cdouble s, cdouble z, const ParameterVector& omegas, double tol) {
  return f_one_sided(+1, s, z, omegas, tol);
}

EvalResult f_minus(cdouble s, cdouble z, const ParameterVector& omegas, double tol) {
  return f_one_sided(-1, s, z, omegas, tol);
}

cdouble f_deriv_nonpos(int sign, int N, cdouble z, const ParameterVector& omegas,
                       double tol) {
  if (N < 0) throw RangeError("f_deriv_nonpos: N must be >= 0");
  const int m = N + 1;
  const cdouble s = cdouble(1.0 - static_cast<double>(m), 0.0);
  require_f_domain(sign, s, z, omegas);
  const std::size_t r = omegas.size();
  const DirectedComplex zd = DirectedComplex::from_principal(z);
  double fact = 1.0;
  for (int i = 2; i <= m - 1; ++i) fact *= static_cast<double>(i);
  const double pref_mag = fact / std::pow(kTwoPi, static_cast<double>(m - 1));
  cdouble acc(0.0, 0.0);
  long terms = 0;
  for (std::size_t k = 1; k <= r; ++k) {
    const NormalizedParams np = normalize(zd, omegas, k);
    const cdouble wk_pow = int_pow(omegas.at(k).value(), m - 1);
    const double tol_k = tol / (static_cast<double>(r) *
                                std::max(1.0, pref_mag * std::abs(wk_pow)));
    double ek = 0.0;
    acc += wk_pow * detail::fourier_k_series(sign, s, np, r, tol_k, terms, ek);
  }
  const double msign = ((m - 1) % 2 == 0) ? 1.0 : -1.0;
  return msign * fact / int_pow(cdouble(0.0, kTwoPi), m - 1) * acc;
}

EvalResult capital_F(cdouble s, cdouble z, const ParameterVector& omegas, double tol) {
  const EvalResult p = f_plus(s, z, omegas, tol / 2.0);
  const EvalResult q = f_minus(s, z, omegas, tol / 2.0);
  const cdouble phase = std::exp(cdouble(0.0, -kPi) * s);
  return {p.value - phase * q.value, p.err_estimate + std::abs(phase) * q.err_estimate,
          p.terms_used + q.terms_used, Method::fourier};
}

EvalResult g_function(cdouble s, cdouble tau, double tol) {
  if (!(tau.imag() > 0.0)) {
    throw DomainError("g_function: tau must lie in the upper half-plane");
  }
  const DirectedComplex tau_d = DirectedComplex::from_principal(tau);
  const DirectedComplex one = DirectedComplex::from_polar(1.0, 0.0);
  const DirectedComplex epi = DirectedComplex::from_polar(1.0, kPi);

  const auto a = xi(BilateralRequest::make(s, tau_d, epi,
                                           ParameterVector({tau_d})),
                    tol / 2.0);
  const auto b = xi(BilateralRequest::make(s, one, tau_d, ParameterVector({one})),
                    tol / 2.0);
  return {a.value - b.value, a.err_estimate + b.err_estimate,
          a.terms_used + b.terms_used, Method::fourier};
}

cdouble g_deriv_nonpos(int m, cdouble tau, double tol) {
  if (!(tau.imag() > 0.0)) {
    throw DomainError("g_deriv_nonpos: tau must lie in the upper half-plane");
  }
  const DirectedComplex tau_d = DirectedComplex::from_principal(tau);
  const DirectedComplex alpha = DirectedComplex::from_polar(1.0, kPi).over(tau_d);
  const cdouble av = alpha.value();
  const ParameterVector tau_pv({tau_d});
  const ParameterVector alpha_pv = ParameterVector::from_values({av});
  // The alpha^s prefactor differentiates to alpha^{1-m} (log alpha xi + xi'),
  // and xi(1-m) = 0.
  const cdouble d1 = xi_deriv_nonpos(m, tau, tau_pv, tol / 2.0);
  const cdouble d2 = xi_deriv_nonpos(m, av, alpha_pv, tol / 2.0);
  return d1 - cpow(alpha, cdouble(1.0 - static_cast<double>(m), 0.0)) * d2;
}

} // namespace bzeta
