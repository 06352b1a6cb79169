#include "bzeta/barnes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "fourier_kernel.hpp"
#include "tail.hpp"

namespace bzeta {

namespace {

struct ArgWindow {
  double lo = 0.0;
  double hi = 0.0;
};

ArgWindow argument_window(const DirectedComplex& z, const ParameterVector& omegas) {
  ArgWindow w;
  w.lo = w.hi = z.principal_argument();
  for (const auto& e : omegas.entries()) {
    const double a = e.principal_argument();
    w.lo = std::min(w.lo, a);
    w.hi = std::max(w.hi, a);
  }
  return w;
}

bool near_integer(cdouble s, long& m) {
  if (std::abs(s.imag()) > kIntegerEps) return false;
  const double rounded = std::round(s.real());
  if (std::abs(s.real() - rounded) > kIntegerEps) return false;
  m = static_cast<long>(rounded);
  return true;
}

// Enumerates m in N0^r with |m|_1 = M, invoking f(offset) with
// offset = sum m_j omega_j.
template <typename F>
void shell_rec(const std::vector<cdouble>& omegas, std::size_t level, long remaining,
               cdouble partial, F&& f) {
  if (level + 1 == omegas.size()) {
    f(partial + static_cast<double>(remaining) * omegas[level]);
    return;
  }
  for (long m = 0; m <= remaining; ++m) {
    shell_rec(omegas, level + 1, remaining - m,
              partial + static_cast<double>(m) * omegas[level], f);
  }
}

template <typename F>
void for_shell(const std::vector<cdouble>& omegas, long M, F&& f) {
  shell_rec(omegas, 0, M, cdouble(0.0, 0.0), f);
}

struct ShellGeometry {
  double c0 = 0.0;      // cos(spread/2) * |z|
  double d = 0.0;       // cos(spread/2) * min |omega_j|
  double arg_amp = 0.0; // e^{|Im s| * max |arg|} over the window
};

ShellGeometry shell_geometry(const DirectedComplex& z, const ParameterVector& omegas,
                             cdouble s) {
  const ArgWindow w = argument_window(z, omegas);
  const double half = 0.5 * (w.hi - w.lo);
  ShellGeometry g;
  const double c = std::cos(half); // positive since spread < pi
  double minmod = std::numeric_limits<double>::infinity();
  for (const auto& e : omegas.entries()) minmod = std::min(minmod, e.modulus());
  g.c0 = c * z.modulus();
  g.d = c * minmod;
  g.arg_amp = std::exp(std::abs(s.imag()) * std::max(std::abs(w.lo), std::abs(w.hi)));
  return g;
}

// Rigorous bound on the lattice tail over shells M' > M.
double shell_tail_bound(const ShellGeometry& g, std::size_t r, double sigma, long M) {
  const double x = static_cast<double>(M + 1);
  if (sigma <= static_cast<double>(r)) return std::numeric_limits<double>::infinity();
  double fact = 1.0;
  for (std::size_t i = 2; i < r; ++i) fact *= static_cast<double>(i);
  const double gN = (x + static_cast<double>(r)) / (g.c0 + g.d * x);
  const double B = std::pow(std::max(gN, 1.0 / g.d), static_cast<double>(r - 1));
  return g.arg_amp * B / fact *
         std::pow(g.c0 + g.d * static_cast<double>(M), static_cast<double>(r) - sigma) /
         (g.d * (sigma - static_cast<double>(r)));
}

} // namespace

EvalResult barnes_zeta_direct(const BarnesRequest& req, double tol) {
  const std::size_t r = req.omegas.size();
  const double sigma = req.s.real();
  if (r == 0) {
    return {cpow(req.z, -req.s), 0.0, 1, Method::direct};
  }
  if (!(sigma > static_cast<double>(r) + 0.5)) {
    throw ConvergenceError("barnes_zeta_direct: Re(s) must exceed r + 0.5");
  }
  if (!check_oc(req.z, req.omegas)) {
    throw DomainError("barnes_zeta_direct: one-side condition violated");
  }

  const ShellGeometry geo = shell_geometry(req.z, req.omegas, req.s);
  const std::vector<cdouble> ws = req.omegas.values();
  const cdouble z0 = req.z.value();

  // Work out how many lattice points the rigorous bound needs; switch to the
  // accelerated path when that is out of budget.
  const double kPointBudget = 4e6;
  {
    // Solve shell_tail_bound ~= tol by inverting the power law.
    const double target = tol;
    const double lead = shell_tail_bound(geo, r, sigma, 1);
    if (lead > target) {
      const double growth = std::pow(lead / target, 1.0 / (sigma - static_cast<double>(r)));
      const double M_needed = (geo.c0 + geo.d) * growth / geo.d;
      double points = 1.0;
      for (std::size_t i = 0; i < r; ++i) points *= (M_needed + static_cast<double>(i + 1));
      for (std::size_t i = 2; i <= r; ++i) points /= static_cast<double>(i);
      if (points > kPointBudget) {
        EvalResult em = barnes_zeta_em(req, tol);
        return em;
      }
    }
  }

  cdouble acc(0.0, 0.0);
  long terms = 0;
  double bound = std::numeric_limits<double>::infinity();
  for (long M = 0;; ++M) {
    for_shell(ws, M, [&](cdouble offset) {
      acc += cpow(DirectedComplex::from_principal(z0 + offset), -req.s);
      ++terms;
    });
    bound = shell_tail_bound(geo, r, sigma, M);
    if (bound <= tol * std::max(std::abs(acc), 1e-300)) break;
    if (terms > static_cast<long>(kPointBudget) * 2) {
      // The a-priori estimate was too optimistic; finish with acceleration.
      return barnes_zeta_em(req, tol);
    }
  }
  return {acc, bound, terms, Method::direct};
}

namespace {

struct EmOut {
  cdouble value{0.0, 0.0};
  double err = 0.0;
};

constexpr int kAsymptoticMax = 48;

// Large-argument expansion (Watson's lemma applied to the Barnes integral
// representation):
//   zeta_r(s, z | omega) ~ sum_k B_{r,k}(|omega|+ | omega)/k!
//                          * Gamma(s - r + k)/Gamma(s) * z^{r-k-s}.
// `bcoeff` carries B_{r,k}(|omega|+)/k!; `ratio0` is 1/((s-1)...(s-r)).
// The series is truncated at its smallest term; that term is the error.
EmOut zeta_asymptotic(cdouble s, cdouble z, std::size_t r,
                      const std::vector<cdouble>& bcoeff, cdouble ratio0,
                      long& evals) {
  ++evals;
  const DirectedComplex zd = DirectedComplex::from_principal(z);
  cdouble zpow = cpow(zd, cdouble(static_cast<double>(r), 0.0) - s);
  const cdouble zinv = 1.0 / z;
  cdouble ratio = ratio0; // Gamma(s - r + k) / Gamma(s) at k = 0
  cdouble acc(0.0, 0.0);
  double err = 0.0;
  // Odd coefficients vanish (up to rounding), so neither the turn detection
  // nor the convergence test may react to a single tiny term.
  double prev = std::numeric_limits<double>::infinity(); // last significant |term|
  int tiny_streak = 0;
  for (int k = 0; k < static_cast<int>(bcoeff.size()); ++k) {
    const cdouble term = bcoeff[k] * ratio * zpow;
    const double mag = std::abs(term);
    ratio *= s - static_cast<double>(r) + static_cast<double>(k);
    zpow *= zinv;
    const double floor = 1e-16 * std::max(std::abs(acc), 1e-300);
    if (mag <= floor) {
      if (++tiny_streak >= 2) return {acc, err};
      continue;
    }
    if (k > 4 && mag > prev) {
      err += prev; // asymptotic turn: the smallest term bounds the remainder
      return {acc, err};
    }
    tiny_streak = 0;
    acc += term;
    err += 2e-16 * mag;
    prev = mag;
  }
  err += prev;
  return {acc, err};
}

// Continuation of zeta_r by splitting N0^r into the box [0,N)^r plus, for
// every nonempty subset S of directions, a box of rank-|S| tails that start
// at depth N and are evaluated by the asymptotic expansion.  No recursive
// zeta evaluations are involved, which keeps cancellation at the level of
// plain rounding.
EmOut em_eval(cdouble s, cdouble z, const ParameterVector& omegas, long& evals) {
  const std::size_t r = omegas.size();
  const std::vector<cdouble> ws = omegas.values();

  double spread_lo = DirectedComplex::from_principal(z).principal_argument();
  double spread_hi = spread_lo;
  double wmin = std::numeric_limits<double>::infinity();
  double wmax = 0.0;
  for (const auto& e : omegas.entries()) {
    const double a = e.principal_argument();
    spread_lo = std::min(spread_lo, a);
    spread_hi = std::max(spread_hi, a);
    wmin = std::min(wmin, e.modulus());
    wmax = std::max(wmax, e.modulus());
  }
  const double cos_half = std::cos(0.5 * (spread_hi - spread_lo));
  // Distance scale at which the asymptotic series bottoms out near 1e-15:
  // the optimal truncation error is roughly exp(-2 pi R cos / wmax).
  const double R = wmax * (6.0 + 0.45 * std::abs(s)) / std::max(cos_half, 0.2);
  long N = static_cast<long>(std::ceil(R / (std::max(cos_half, 0.2) * wmin)));
  N = std::max<long>(N, 6);
  // Box-size budget keeps high ranks affordable; the error estimate stays
  // honest if the asymptotic tails bottom out early.
  const long budget[] = {400, 400, 220, 60, 26, 14};
  N = std::min<long>(N, budget[std::min<std::size_t>(r, 5)]);

  cdouble acc(0.0, 0.0);
  double err = 0.0;

  // Finite box.
  std::vector<long> m(r, 0);
  while (true) {
    cdouble base = z;
    for (std::size_t j = 0; j < r; ++j) base += static_cast<double>(m[j]) * ws[j];
    const cdouble t = cpow(DirectedComplex::from_principal(base), -s);
    acc += t;
    err += 2e-16 * std::abs(t);
    ++evals;
    std::size_t j = 0;
    while (j < r && ++m[j] == N) {
      m[j] = 0;
      ++j;
    }
    if (j == r) break;
  }

  // Tails per nonempty direction subset.
  for (std::size_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<cdouble> sector;
    std::vector<std::size_t> comp;
    cdouble start = z;
    for (std::size_t j = 0; j < r; ++j) {
      if (mask & (1u << j)) {
        sector.push_back(ws[j]);
        start += static_cast<double>(N) * ws[j];
      } else {
        comp.push_back(j);
      }
    }
    std::vector<DirectedComplex> sector_dir;
    for (std::size_t j = 0; j < r; ++j) {
      if (mask & (1u << j)) sector_dir.push_back(omegas.at(j + 1));
    }
    const ParameterVector sector_pv{std::move(sector_dir)};
    cdouble wsum(0.0, 0.0);
    for (const cdouble& w : sector) wsum += w;
    const std::vector<cdouble> bcoeff =
        multiple_bernoulli_over_fact(kAsymptoticMax, wsum, sector_pv);
    cdouble ratio0(1.0, 0.0);
    for (std::size_t i = 1; i <= sector.size(); ++i) {
      ratio0 /= s - static_cast<double>(i);
    }

    std::vector<long> mc(comp.size(), 0);
    while (true) {
      cdouble base = start;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        base += static_cast<double>(mc[i]) * ws[comp[i]];
      }
      const EmOut t = zeta_asymptotic(s, base, sector.size(), bcoeff, ratio0, evals);
      acc += t.value;
      err += t.err + 2e-16 * std::abs(t.value);
      std::size_t i = 0;
      while (i < comp.size() && ++mc[i] == N) {
        mc[i] = 0;
        ++i;
      }
      if (i == comp.size()) break;
    }
  }
  return {acc, err};
}

} // namespace

EvalResult barnes_zeta_em(const BarnesRequest& req, double tol) {
  (void)tol;
  const std::size_t r = req.omegas.size();
  if (r == 0) {
    return {cpow(req.z, -req.s), 0.0, 1, Method::reduction};
  }
  long m = 0;
  if (near_integer(req.s, m) && m >= 1 && m <= static_cast<long>(r)) {
    throw PoleError("barnes_zeta_em: s at a pole of zeta_r");
  }
  if (!check_oc(req.z, req.omegas)) {
    throw DomainError("barnes_zeta_em: one-side condition violated");
  }
  long evals = 0;
  const EmOut out = em_eval(req.s, req.z.value(), req.omegas, evals);
  return {out.value, out.err, evals, Method::reduction};
}

EvalResult barnes_zeta_fourier(const BarnesRequest& req, double tol) {
  const std::size_t r = req.omegas.size();
  if (r == 0) {
    throw DomainError("barnes_zeta_fourier: r must be at least 1");
  }
  for (const auto& w : req.omegas.entries()) {
    if (!(w.principal_argument() > 0.0 && w.principal_argument() < kPi)) {
      throw DomainError("barnes_zeta_fourier: omegas must lie in the open upper half-plane");
    }
  }
  if (!check_orc(req.omegas)) {
    throw DomainError("barnes_zeta_fourier: order condition violated");
  }
  if (!in_cone_D(req.z.value(), req.omegas)) {
    throw DomainError("barnes_zeta_fourier: z outside the cone D");
  }
  long m = 0;
  if (near_integer(req.s, m)) {
    if (m >= 1 && m <= static_cast<long>(r)) {
      throw PoleError("barnes_zeta_fourier: s at a pole of zeta_r");
    }
    if (m > static_cast<long>(r)) {
      // Gamma(1-s) pole against a vanishing bracket; the direct series
      // converges here and supplies the limit.
      return barnes_zeta_direct(req, tol);
    }
  }

  const cdouble pref = std::pow(cdouble(kTwoPi, 0.0), req.s - 1.0) * gamma(1.0 - req.s);
  const cdouble rot_plus = std::exp(cdouble(0.0, kPi / 2.0) * (req.s - 1.0));
  const cdouble rot_minus = std::exp(cdouble(0.0, -kPi / 2.0) * (req.s - 1.0));

  cdouble plus(0.0, 0.0), minus(0.0, 0.0);
  long terms = 0;
  double err = 0.0;
  for (std::size_t k = 1; k <= r; ++k) {
    const NormalizedParams np = normalize(req.z, req.omegas, k);
    const cdouble wk_pow = cpow(req.omegas.at(k), -req.s);
    // Budget per block, discounted by the amplification it will see.
    const double tol_k = tol / (static_cast<double>(2 * r) *
                                std::max(1.0, std::abs(pref) * std::abs(wk_pow)));
    double e1 = 0.0, e2 = 0.0;
    plus += wk_pow * detail::fourier_k_series(+1, req.s, np, r, tol_k, terms, e1);
    minus += wk_pow * detail::fourier_k_series(-1, req.s, np, r, tol_k, terms, e2);
    err += std::abs(wk_pow) * (e1 + e2);
  }
  const cdouble value = pref * (rot_plus * plus + rot_minus * minus);
  return {value, std::abs(pref) * err, terms, Method::fourier};
}

cdouble barnes_special_value(int m, cdouble z, const ParameterVector& omegas) {
  if (m < 1) throw RangeError("barnes_special_value: m must be >= 1");
  const int r = static_cast<int>(omegas.size());
  if (r < 1) throw DomainError("barnes_special_value: r must be >= 1");
  double ratio = 1.0; // (m-1)!/(m+r-1)!
  for (int i = m; i <= m + r - 1; ++i) ratio /= static_cast<double>(i);
  const double sign = (r % 2 == 0) ? 1.0 : -1.0;
  return sign * ratio * multiple_bernoulli(r, r + m - 1, z, omegas);
}

cdouble barnes_residue(int m, cdouble z, const ParameterVector& omegas) {
  const int r = static_cast<int>(omegas.size());
  if (m < 1 || m > r) throw RangeError("barnes_residue: m must be in 1..r");
  double denom = 1.0;
  for (int i = 2; i <= m - 1; ++i) denom *= static_cast<double>(i);
  for (int i = 2; i <= r - m; ++i) denom *= static_cast<double>(i);
  const double sign = ((r - m) % 2 == 0) ? 1.0 : -1.0;
  return sign / denom * multiple_bernoulli(r, r - m, z, omegas);
}

namespace {

struct ShiftPlan {
  std::vector<long> counts; // signed shift counts per entry (z_target = z - sum n_k w_k)
  cdouble target;
};

// Solves z = sum t_k w_k in the least-squares sense (exact for r >= 2 since
// the generators span the plane) and floors to integer shifts.
bool plan_shifts(cdouble z, const std::vector<cdouble>& ws, const ParameterVector& pv,
                 ShiftPlan& plan) {
  const std::size_t r = ws.size();
  if (r == 1) {
    const cdouble ratio = z / ws[0];
    if (std::abs(ratio.imag()) > 1e-9 * std::max(1.0, std::abs(ratio.real()))) {
      return false; // off the ray; not reducible at rank 1
    }
    const double t = ratio.real();
    const long n = static_cast<long>(std::floor(t));
    plan.counts = {n};
    plan.target = z - static_cast<double>(n) * ws[0];
    try {
      return in_cone_D(plan.target, pv);
    } catch (const BoundaryError&) {
      return false;
    }
  }

  // Minimum-norm t: t = W^T (W W^T)^{-1} z with W the 2 x r matrix of
  // generator components.
  double s_xx = 0.0, s_xy = 0.0, s_yy = 0.0;
  for (const cdouble& w : ws) {
    s_xx += w.real() * w.real();
    s_xy += w.real() * w.imag();
    s_yy += w.imag() * w.imag();
  }
  const double det = s_xx * s_yy - s_xy * s_xy;
  if (std::abs(det) < 1e-14 * (s_xx + s_yy) * (s_xx + s_yy)) return false;
  const double u1 = (s_yy * z.real() - s_xy * z.imag()) / det;
  const double u2 = (-s_xy * z.real() + s_xx * z.imag()) / det;

  // Deterministic retries through the null space: nudging towards the
  // "all a_k = 1/2" representation when the base solution lands on an edge.
  for (int attempt = 0; attempt <= 4; ++attempt) {
    const double blend = 0.25 * attempt;
    std::vector<long> n(r, 0);
    cdouble target = z;
    for (std::size_t k = 0; k < r; ++k) {
      const double t = ws[k].real() * u1 + ws[k].imag() * u2;
      const double t_adj = (1.0 - blend) * t + blend * 0.5;
      n[k] = static_cast<long>(std::floor(t_adj));
      target -= static_cast<double>(n[k]) * ws[k];
    }
    try {
      if (in_cone_D(target, pv)) {
        plan.counts = std::move(n);
        plan.target = target;
        return true;
      }
    } catch (const BoundaryError&) {
      continue;
    }
  }
  return false;
}

} // namespace

EvalResult barnes_zeta(const BarnesRequest& req, double tol) {
  const std::size_t r = req.omegas.size();
  if (r == 0) {
    return {cpow(req.z, -req.s), 0.0, 1, Method::direct};
  }
  if (!check_oc(req.z, req.omegas)) {
    throw DomainError("barnes_zeta: one-side condition violated");
  }
  long m = 0;
  if (near_integer(req.s, m)) {
    if (m <= 0) {
      const cdouble v = barnes_special_value(static_cast<int>(1 - m), req.z.value(), req.omegas);
      return {v, 1e-14 * std::abs(v), 1, Method::special_value};
    }
    if (m <= static_cast<long>(r)) {
      throw PoleError("barnes_zeta: pole at integer s in 1..r");
    }
    return barnes_zeta_direct(req, tol);
  }
  if (req.s.real() > static_cast<double>(r) + 0.5) {
    return barnes_zeta_direct(req, tol);
  }

  // Rotate every argument into the upper half-plane, centered about pi/2.
  const ArgWindow win = argument_window(req.z, req.omegas);
  const double theta = kPi / 2.0 - 0.5 * (win.lo + win.hi);
  const DirectedComplex alpha = DirectedComplex::from_polar(1.0, theta);
  const DirectedComplex zr = req.z.rotated(theta);
  ParameterVector wr = req.omegas.rotated(theta);

  // Sort entries by argument (the Fourier form needs the order condition).
  {
    std::vector<DirectedComplex> es = wr.entries();
    std::stable_sort(es.begin(), es.end(), [](const DirectedComplex& a, const DirectedComplex& b) {
      return a.principal_argument() < b.principal_argument();
    });
    wr = ParameterVector(std::move(es));
  }

  bool fourier_ok = check_orc(wr);
  ShiftPlan plan;
  if (fourier_ok) {
    fourier_ok = plan_shifts(zr.value(), wr.values(), wr, plan);
  }
  if (!fourier_ok) {
    return barnes_zeta_em(req, tol);
  }
  try {

  // Execute the shifts one at a time through
  //   zeta_r(s, y + w_k) = zeta_r(s, y) - zeta_{r-1}(s, y | hat(k)),
  // spawning one rank-(r-1) dispatcher call per step, largest strides first.
  cdouble corrections(0.0, 0.0);
  double err = 0.0;
  long terms = 0;
  cdouble zcur = zr.value();
  std::vector<long> left = plan.counts;
  long total_steps = 0;
  while (true) {
    std::size_t pick = 0;
    double best = 0.0;
    for (std::size_t k = 0; k < left.size(); ++k) {
      const double score = std::abs(static_cast<double>(left[k])) * std::abs(wr.at(k + 1).value());
      if (score > best) {
        best = score;
        pick = k;
      }
    }
    if (best == 0.0) break;
    if (++total_steps > 64) {
      throw ReductionError("barnes_zeta: shift reduction exceeded 64 steps");
    }
    const cdouble wk = wr.at(pick + 1).value();
    if (left[pick] > 0) {
      // z sits above the target: zeta(s, z) = zeta(s, z - w) - zeta_{r-1}(s, z - w).
      zcur -= wk;
      BarnesRequest sub{req.s, DirectedComplex::from_principal(zcur), wr.hat(pick + 1)};
      const EvalResult c = barnes_zeta(sub, tol);
      corrections -= c.value;
      err += c.err_estimate;
      terms += c.terms_used;
      --left[pick];
    } else {
      // Below the target: zeta(s, z) = zeta(s, z + w) + zeta_{r-1}(s, z).
      BarnesRequest sub{req.s, DirectedComplex::from_principal(zcur), wr.hat(pick + 1)};
      const EvalResult c = barnes_zeta(sub, tol);
      corrections += c.value;
      err += c.err_estimate;
      terms += c.terms_used;
      zcur += wk;
      ++left[pick];
    }
  }

  BarnesRequest core{req.s, DirectedComplex::from_principal(plan.target), wr};
  const EvalResult base = barnes_zeta_fourier(core, tol);
  const cdouble undo = cpow(alpha, req.s);
  const cdouble value = undo * (base.value + corrections);
  return {value, std::abs(undo) * (base.err_estimate + err), base.terms_used + terms,
          Method::fourier};
  } catch (const DomainError&) {
    // The Fourier form is not usable at this configuration (boundary z or
    // too-slow boundary series); continue through Euler-Maclaurin.
  } catch (const ConvergenceError&) {
  }
  return barnes_zeta_em(req, tol);
}

cdouble multiple_gamma(const DirectedComplex& z, const ParameterVector& omegas) {
  const double h = 1e-3;
  const double tol = 1e-12;
  auto at = [&](double s) {
    BarnesRequest req{cdouble(s, 0.0), z, omegas};
    return barnes_zeta(req, tol).value;
  };
  const cdouble f1 = at(h), f_1 = at(-h), f2 = at(2.0 * h), f_2 = at(-2.0 * h);
  const cdouble deriv = (8.0 * (f1 - f_1) - (f2 - f_2)) / (12.0 * h);
  return std::exp(deriv);
}

} // namespace bzeta
