#include "bzeta/qprod.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tail.hpp"

namespace bzeta {

namespace {

template <typename F>
void product_shell_rec(const std::vector<cdouble>& qs, std::size_t level,
                       long remaining, cdouble partial, F&& f) {
  if (level + 1 == qs.size()) {
    cdouble w = partial;
    for (long i = 0; i < remaining; ++i) w *= qs[level];
    f(w);
    return;
  }
  cdouble w = partial;
  for (long m = 0; m <= remaining; ++m) {
    product_shell_rec(qs, level + 1, remaining - m, w, f);
    w *= qs[level];
  }
}

} // namespace

EvalResult qpoch_multi(const QData& d, double tol) {
  const std::size_t r = d.qs.size();
  if (r == 0) {
    return {1.0 - d.x, 0.0, 1, Method::direct};
  }
  double qmax = 0.0;
  for (const cdouble& q : d.qs) {
    const double m = std::abs(q);
    if (m >= 1.0) {
      throw DomainError("qpoch_multi: every |q_k| must be below 1");
    }
    qmax = std::max(qmax, m);
  }
  if (d.x == cdouble(0.0, 0.0)) {
    return {cdouble(1.0, 0.0), 0.0, 1, Method::direct};
  }

  // Factors with |q^m x| >= 0.75 multiply a prefactor directly; once the
  // whole shell is inside that radius the logs are accumulated and the tail
  // is bounded by sum |w| / (1 - |w|) over the remaining lattice.
  cdouble prefactor(1.0, 0.0);
  cdouble log_acc(0.0, 0.0);
  long terms = 0;
  const double xmod = std::abs(d.x);
  double bound = std::numeric_limits<double>::infinity();
  for (long M = 0;; ++M) {
    product_shell_rec(d.qs, 0, M, d.x, [&](cdouble w) {
      const cdouble f = 1.0 - w;
      if (f == cdouble(0.0, 0.0)) {
        throw ZeroFactorError("qpoch_multi: factor exactly zero");
      }
      if (std::abs(w) >= 0.75) {
        prefactor *= f;
      } else {
        log_acc += std::log(f);
      }
      ++terms;
    });
    const double shell_top = xmod * std::pow(qmax, static_cast<double>(M + 1));
    if (shell_top < 0.75) {
      // |log(1-w)| <= |w|/(1-|w|); shell M' holds C(M'+r-1, r-1) <=
      // (2 M')^{r-1} points of modulus <= |x| qmax^{M'}.
      const double amp = std::pow(2.0, static_cast<double>(r - 1)) * xmod /
                         (1.0 - shell_top);
      bound = amp * detail::tail_power_geometric(M, static_cast<double>(r - 1), qmax);
      if (bound <= tol) break;
    }
    if (M > 100000) {
      throw ConvergenceError("qpoch_multi: tolerance unreachable");
    }
  }
  const cdouble value = prefactor * std::exp(log_acc);
  return {value, bound * std::abs(value), terms, Method::direct};
}

EvalResult qpoch_tilde(const QData& d, double tol) {
  const int r = static_cast<int>(d.qs.size());
  if (d.split < 0 || d.split > r) {
    throw DomainError("qpoch_tilde: split out of range");
  }
  for (int k = 0; k < r; ++k) {
    const double m = std::abs(d.qs[k]);
    if (std::abs(m - 1.0) < 1e-14) {
      throw DomainError("qpoch_tilde: |q_k| = 1 is not allowed");
    }
    if (k < d.split && m < 1.0) {
      throw DomainError("qpoch_tilde: entries of modulus > 1 must come first");
    }
    if (k >= d.split && m > 1.0) {
      throw DomainError("qpoch_tilde: unsorted split");
    }
  }
  QData reduced;
  reduced.x = d.x;
  reduced.qs = d.qs;
  for (int k = 0; k < d.split; ++k) {
    reduced.qs[k] = 1.0 / d.qs[k];
    reduced.x *= reduced.qs[k];
  }
  const EvalResult base = qpoch_multi(reduced, tol);
  if (d.split % 2 == 0) return base;
  const cdouble v = 1.0 / base.value;
  return {v, base.err_estimate / std::norm(base.value), base.terms_used, base.method};
}

EvalResult dedekind_eta(cdouble tau, double tol) {
  if (!(tau.imag() > 0.0)) {
    throw DomainError("dedekind_eta: tau must lie in the upper half-plane");
  }
  const cdouble q = std::exp(cdouble(0.0, kTwoPi) * tau);
  QData d;
  d.x = q;
  d.qs = {q};
  const EvalResult p = qpoch_multi(d, tol);
  const cdouble pref = std::exp(cdouble(0.0, kPi / 12.0) * tau);
  return {pref * p.value, std::abs(pref) * p.err_estimate, p.terms_used, Method::direct};
}

EvalResult lambert_sum_exp(int p, cdouble tau, double tol) {
  if (!(tau.imag() > 0.0)) {
    throw DomainError("lambert_sum: tau must lie in the upper half-plane");
  }
  const double qmod = std::exp(-kTwoPi * tau.imag());
  cdouble acc(0.0, 0.0);
  long terms = 0;
  double bound = 0.0;
  const cdouble i2pi(0.0, kTwoPi);
  for (long n = 1;; ++n) {
    const cdouble qn = std::exp(i2pi * (static_cast<double>(n) * tau));
    acc += std::pow(static_cast<double>(n), static_cast<double>(p)) * qn / (1.0 - qn);
    ++terms;
    bound = detail::tail_power_geometric(n, static_cast<double>(p), qmod) / (1.0 - qmod);
    if (bound <= tol * std::max(std::abs(acc), 1e-300)) break;
    if (n > 2000000) {
      throw ConvergenceError("lambert_sum: tolerance unreachable");
    }
  }
  return {acc, bound, terms, Method::direct};
}

EvalResult lambert_sum(int N, cdouble tau, double tol) {
  if (N < 1) throw RangeError("lambert_sum: N must be >= 1");
  return lambert_sum_exp(2 * N - 1, tau, tol);
}

EvalResult iseki_product(int sign, cdouble z, const ParameterVector& omegas,
                         double tol) {
  const std::size_t r = omegas.size();
  if (r == 0) throw DomainError("iseki_product: at least one omega required");
  if (!check_orc(omegas)) {
    throw DomainError("iseki_product: order condition violated");
  }
  const DirectedComplex zd = DirectedComplex::from_principal(z);
  cdouble value(1.0, 0.0);
  double rel_err = 0.0;
  long terms = 0;
  const cdouble i2pi(0.0, kTwoPi);
  for (std::size_t k = 1; k <= r; ++k) {
    const NormalizedParams np = normalize(zd, omegas, k);
    // Reduced tilde data: all q entries pulled inside the unit disk, the
    // inverted ones absorbed into x (Lemma 2.2 in both directions).
    cdouble w0 = (sign > 0) ? np.z_k : -np.z_k;
    QData d;
    for (std::size_t idx = 0; idx < np.omega_jk.size(); ++idx) {
      const std::size_t j = (idx + 1 <= k - 1) ? idx + 1 : idx + 2;
      const cdouble a = (j < k) ? -np.omega_jk[idx] : np.omega_jk[idx];
      d.qs.push_back(std::exp(i2pi * a));
      if (sign > 0 && j < k) w0 += a;
      if (sign < 0 && j > k) w0 += a;
    }
    // For r = 1 (no q entries) the factor is the finite 1 - x', which exists
    // for real exponents as well; infinite products need strict decay.
    if (w0.imag() < -1e-12 || (!d.qs.empty() && !(w0.imag() > 0.0))) {
      throw DomainError("iseki_product: tilde factor not evaluable at this z");
    }
    d.x = std::exp(i2pi * w0);
    const EvalResult f = qpoch_multi(d, tol / static_cast<double>(r));
    const long exponent = (sign > 0) ? static_cast<long>(k) - 1
                                     : static_cast<long>(r) - static_cast<long>(k);
    if (exponent % 2 == 0) {
      value *= f.value;
    } else {
      value /= f.value;
    }
    rel_err += f.err_estimate / std::abs(f.value);
    terms += f.terms_used;
  }
  return {value, rel_err * std::abs(value), terms, Method::direct};
}

} // namespace bzeta
