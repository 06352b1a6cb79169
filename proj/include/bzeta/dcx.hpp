#pragma once

#include <complex>
#include <numbers>

#include "bzeta/errors.hpp"

namespace bzeta {

using cdouble = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Nonzero complex number stored as (modulus, argument) with the argument kept
// as an unrestricted real.  Rotations by exactly +-pi are tracked as an
// integer half-turn count, so the formal e^{pi i} / e^{-pi i} multiplications
// compose and cancel exactly.  Conversion to rectangular form happens only
// when a caller asks for it.
class DirectedComplex {
public:
  // Builds from a nonzero rectangular value; the stored argument is the
  // principal one in (-pi, pi].
  static DirectedComplex from_principal(cdouble w);

  // Builds from explicit polar data; the argument may be any real.
  static DirectedComplex from_polar(double modulus, double argument);

  double modulus() const { return modulus_; }
  double argument() const { return base_ + static_cast<double>(half_turns_) * kPi; }

  // The stored argument reduced mod 2*pi into (-pi, pi].
  double principal_argument() const;

  // Rectangular value; direction information beyond mod 2*pi is lost.
  cdouble value() const;

  // Same modulus, argument increased by theta; theta = +-pi adjusts the
  // half-turn count and is exact.
  DirectedComplex rotated(double theta) const;

  // Directed multiplication/division: moduli multiply, arguments add.
  DirectedComplex times(const DirectedComplex& other) const;
  DirectedComplex over(const DirectedComplex& other) const;

  DirectedComplex reciprocal() const;

  friend bool operator==(const DirectedComplex& a, const DirectedComplex& b) {
    return a.modulus_ == b.modulus_ && a.base_ == b.base_ &&
           a.half_turns_ == b.half_turns_;
  }

private:
  DirectedComplex(double m, double a, int h) : modulus_(m), base_(a), half_turns_(h) {}
  double modulus_;
  double base_;
  int half_turns_;
};

// a^s through the directed logarithm: exp(s * (log|a| + i*arg a)) with the
// stored, unreduced argument.  Entire in s for fixed a.
cdouble cpow(const DirectedComplex& a, cdouble s);

// Classical gamma function (Lanczos with reflection).  Throws PoleError at
// nonpositive integers.
cdouble gamma(cdouble s);

// 1/gamma(s), entire; returns exact 0 at nonpositive integers.
cdouble recip_gamma(cdouble s);

} // namespace bzeta
