#include "bzeta/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bzeta {

namespace {

bool empty_range(std::size_t m, std::size_t n, std::size_t r) {
  // The two sanctioned empty forms: [1, 0] and [r+1, r].
  return (m == 1 && n == 0) || (m == r + 1 && n == r);
}

void require_range(std::size_t m, std::size_t n, std::size_t r) {
  if (empty_range(m, n, r)) return;
  if (m < 1 || n < m || n > r) {
    throw RangeError("ParameterVector: malformed range");
  }
}

double cross(cdouble a, cdouble b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

double dot(cdouble a, cdouble b) {
  return a.real() * b.real() + a.imag() * b.imag();
}

} // namespace

ParameterVector ParameterVector::from_values(const std::vector<cdouble>& values) {
  std::vector<DirectedComplex> entries;
  entries.reserve(values.size());
  for (const cdouble& v : values) entries.push_back(DirectedComplex::from_principal(v));
  return ParameterVector(std::move(entries));
}

const DirectedComplex& ParameterVector::at(std::size_t j) const {
  if (j < 1 || j > entries_.size()) {
    throw RangeError("ParameterVector: index out of range");
  }
  return entries_[j - 1];
}

std::vector<cdouble> ParameterVector::values() const {
  std::vector<cdouble> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value());
  return out;
}

ParameterVector ParameterVector::hat(std::size_t j) const {
  if (j < 1 || j > entries_.size()) {
    throw RangeError("ParameterVector: hat index out of range");
  }
  std::vector<DirectedComplex> out;
  out.reserve(entries_.size() - 1);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != j - 1) out.push_back(entries_[i]);
  }
  return ParameterVector(std::move(out));
}

ParameterVector ParameterVector::neg_range(std::size_t m, std::size_t n,
                                           RotationDirection dir) const {
  require_range(m, n, entries_.size());
  std::vector<DirectedComplex> out = entries_;
  if (!empty_range(m, n, entries_.size())) {
    const double theta = (dir == RotationDirection::up) ? kPi : -kPi;
    for (std::size_t i = m - 1; i <= n - 1; ++i) out[i] = out[i].rotated(theta);
  }
  return ParameterVector(std::move(out));
}

cdouble ParameterVector::sum_range(std::size_t m, std::size_t n) const {
  require_range(m, n, entries_.size());
  cdouble acc(0.0, 0.0);
  if (!empty_range(m, n, entries_.size())) {
    for (std::size_t i = m - 1; i <= n - 1; ++i) acc += entries_[i].value();
  }
  return acc;
}

cdouble ParameterVector::prod_range(std::size_t m, std::size_t n) const {
  require_range(m, n, entries_.size());
  cdouble acc(1.0, 0.0);
  if (!empty_range(m, n, entries_.size())) {
    for (std::size_t i = m - 1; i <= n - 1; ++i) acc *= entries_[i].value();
  }
  return acc;
}

ParameterVector ParameterVector::appended(const DirectedComplex& w) const {
  std::vector<DirectedComplex> out = entries_;
  out.push_back(w);
  return ParameterVector(std::move(out));
}

ParameterVector ParameterVector::prepended(const DirectedComplex& w) const {
  std::vector<DirectedComplex> out;
  out.reserve(entries_.size() + 1);
  out.push_back(w);
  out.insert(out.end(), entries_.begin(), entries_.end());
  return ParameterVector(std::move(out));
}

ParameterVector ParameterVector::rotated(double theta) const {
  std::vector<DirectedComplex> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.rotated(theta));
  return ParameterVector(std::move(out));
}

bool check_oc(const DirectedComplex& z, const ParameterVector& omegas) {
  double lo = z.principal_argument();
  double hi = lo;
  for (const auto& w : omegas.entries()) {
    const double a = w.principal_argument();
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return hi - lo < kPi;
}

bool check_soc(const DirectedComplex& z, const DirectedComplex& omega0,
               const ParameterVector& omegas) {
  const double a0 = omega0.principal_argument();
  if (!(a0 > 0.0 && a0 <= kPi)) {
    throw DomainError("check_soc: arg(omega_0) must lie in (0, pi]");
  }
  const double az = z.principal_argument();
  if (!(a0 - kPi <= az && az <= a0)) return false;
  for (const auto& w : omegas.entries()) {
    const double a = w.principal_argument();
    if (!(a0 - kPi < a && a < a0)) return false;
  }
  return true;
}

bool check_orc(const ParameterVector& omegas) {
  const auto& e = omegas.entries();
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (!(e[i - 1].principal_argument() < e[i].principal_argument())) return false;
  }
  return true;
}

namespace {

// Zonogon of the generators, counterclockwise.  Generators are walked in
// increasing argument order from 0 to their total sum and back with the
// negated edges; with all arguments in (0, pi) this is convex.
std::vector<cdouble> zonogon_vertices(std::vector<cdouble> gens) {
  std::sort(gens.begin(), gens.end(), [](cdouble a, cdouble b) {
    return std::arg(a) < std::arg(b);
  });
  const std::size_t r = gens.size();
  std::vector<cdouble> verts;
  verts.reserve(2 * r);
  cdouble acc(0.0, 0.0);
  verts.push_back(acc);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    acc += gens[i];
    verts.push_back(acc);
  }
  acc += gens[r - 1];
  verts.push_back(acc); // total sum
  for (std::size_t i = 0; i + 1 < r; ++i) {
    acc -= gens[i];
    verts.push_back(acc);
  }
  return verts;
}

} // namespace

bool in_cone_D(cdouble z, const ParameterVector& omegas, double margin) {
  const std::size_t r = omegas.size();
  if (r == 0) {
    throw DomainError("in_cone_D: at least one generator required");
  }
  std::vector<cdouble> gens = omegas.values();
  double scale = 0.0;
  for (const cdouble& g : gens) {
    if (!(g.imag() > 0.0)) {
      throw DomainError("in_cone_D: generators must lie in the open upper half-plane");
    }
    scale = std::max(scale, std::abs(g));
  }
  const double abs_margin = margin * scale;

  if (r == 1) {
    const cdouble g = gens[0];
    const double n2 = std::norm(g);
    const double a = dot(z, g) / n2;
    const double perp = std::abs(z - a * g);
    if (perp > abs_margin) return false;
    if (a >= margin && a <= 1.0 - margin) return true;
    if (a < -margin || a > 1.0 + margin) return false;
    throw BoundaryError("in_cone_D: point within margin of the segment endpoint");
  }

  const std::vector<cdouble> verts = zonogon_vertices(gens);
  double sdmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const cdouble a = verts[i];
    const cdouble b = verts[(i + 1) % verts.size()];
    const cdouble e = b - a;
    const double len = std::abs(e);
    if (len == 0.0) continue;
    sdmin = std::min(sdmin, cross(e, z - a) / len);
  }
  if (sdmin >= abs_margin) return true;
  if (sdmin <= -abs_margin) return false;
  throw BoundaryError("in_cone_D: point within margin of the zonotope boundary");
}

bool in_sector_Dplus(cdouble z, const ParameterVector& omegas) {
  if (omegas.empty()) throw DomainError("in_sector_Dplus: empty parameter vector");
  if (z == cdouble(0.0, 0.0)) return false;
  const double az = std::arg(z);
  const double ar = omegas.at(omegas.size()).principal_argument();
  return ar < az && az < kPi;
}

bool in_sector_Dminus(cdouble z, const ParameterVector& omegas) {
  if (omegas.empty()) throw DomainError("in_sector_Dminus: empty parameter vector");
  if (z == cdouble(0.0, 0.0)) return false;
  const double az = std::arg(z);
  const double a1 = omegas.at(1).principal_argument();
  return 0.0 < az && az < a1;
}

NormalizedParams normalize(const DirectedComplex& z,
                           const ParameterVector& omegas, std::size_t k) {
  if (k < 1 || k > omegas.size()) {
    throw RangeError("normalize: index out of range");
  }
  const DirectedComplex& wk = omegas.at(k);
  NormalizedParams np;
  np.k = k;
  np.z_k = z.over(wk).value();
  np.x_k = std::exp(cdouble(0.0, kTwoPi) * np.z_k);
  for (std::size_t j = 1; j <= omegas.size(); ++j) {
    if (j == k) continue;
    const cdouble w = omegas.at(j).over(wk).value();
    np.omega_jk.push_back(w);
    np.q_jk.push_back(std::exp(cdouble(0.0, kTwoPi) * w));
  }
  return np;
}

} // namespace bzeta
