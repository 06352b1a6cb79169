#pragma once

#include <cstddef>
#include <vector>

#include "bzeta/dcx.hpp"

namespace bzeta {

enum class RotationDirection { up, down }; // +pi / -pi

// Relative margin used by the strict geometric predicates.  Points closer
// than this (relative to the configuration scale) to a boundary raise
// BoundaryError instead of being classified.
inline constexpr double kGeoMargin = 1e-12;

// Ordered list of nonzero directed complex parameters (omega_1, ..., omega_r).
// Indices are 1-based to match the usual component notation.
class ParameterVector {
public:
  ParameterVector() = default;
  explicit ParameterVector(std::vector<DirectedComplex> entries)
      : entries_(std::move(entries)) {}

  // Convenience: principal-argument entries from rectangular values.
  static ParameterVector from_values(const std::vector<cdouble>& values);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const DirectedComplex& at(std::size_t j) const; // 1-based
  const std::vector<DirectedComplex>& entries() const { return entries_; }

  std::vector<cdouble> values() const;

  // Entry j removed, order preserved.
  ParameterVector hat(std::size_t j) const;

  // Entries m..n rotated by +pi (up) or -pi (down).  The empty form
  // (m, n) = (r+1, r) returns the vector unchanged.
  ParameterVector neg_range(std::size_t m, std::size_t n,
                            RotationDirection dir) const;

  // Sum of entries m..n as a rectangular value; the empty forms (1, 0) and
  // (r+1, r) give 0.
  cdouble sum_range(std::size_t m, std::size_t n) const;

  // Product of entries m..n; the empty form (r+1, r) gives 1.
  cdouble prod_range(std::size_t m, std::size_t n) const;

  cdouble sum() const { return sum_range(1, size()); }
  cdouble prod() const { return prod_range(size() + 1, size()) * prod_range(1, size()); }

  ParameterVector appended(const DirectedComplex& w) const;
  ParameterVector prepended(const DirectedComplex& w) const;

  // Uniform rotation of every entry.
  ParameterVector rotated(double theta) const;

private:
  std::vector<DirectedComplex> entries_;
};

// Per-index normalized data: everything divided by omega_k, plus the
// exponentials that drive the Fourier series.
struct NormalizedParams {
  std::size_t k = 0;              // 1-based index of the normalizing entry
  cdouble z_k;                    // z / omega_k
  std::vector<cdouble> omega_jk;  // omega_j / omega_k, j != k, original order
  cdouble x_k;                    // exp(2 pi i z_k)
  std::vector<cdouble> q_jk;      // exp(2 pi i omega_jk)
};

// One-side condition: the spread of the principal arguments of z and all
// omega_j is strictly less than pi.
bool check_oc(const DirectedComplex& z, const ParameterVector& omegas);

// Strong one-side condition for a distinguished omega_0 with
// 0 < arg(omega_0) <= pi:
//   arg(omega_0) - pi <= arg(z) <= arg(omega_0), and strictly for each
//   omega_j.
bool check_soc(const DirectedComplex& z, const DirectedComplex& omega0,
               const ParameterVector& omegas);

// Order condition: principal arguments strictly increasing.
bool check_orc(const ParameterVector& omegas);

// Membership of z in the open zonotope D = { sum a_k omega_k : 0 < a_k < 1 }.
// Requires every omega_j in the open upper half-plane.  Points within the
// relative margin of the boundary raise BoundaryError.
bool in_cone_D(cdouble z, const ParameterVector& omegas, double margin = kGeoMargin);

// Sectors adjacent to the cone (assuming the order condition):
//   D+ = { arg(omega_r) < arg(z) < pi },  D- = { 0 < arg(z) < arg(omega_1) }.
bool in_sector_Dplus(cdouble z, const ParameterVector& omegas);
bool in_sector_Dminus(cdouble z, const ParameterVector& omegas);

// Normalized data for index k; argument arithmetic is done in directed form.
NormalizedParams normalize(const DirectedComplex& z,
                           const ParameterVector& omegas, std::size_t k);

} // namespace bzeta
