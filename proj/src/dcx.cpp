#include "bzeta/dcx.hpp"

#include <cmath>

namespace bzeta {

DirectedComplex DirectedComplex::from_principal(cdouble w) {
  if (w == cdouble(0.0, 0.0)) {
    throw DomainError("DirectedComplex: zero is not representable");
  }
  double a = std::arg(w);
  // std::arg returns -pi for negative reals approached from below; the
  // convention here is -pi < arg <= pi.
  if (a <= -kPi) a = kPi;
  return DirectedComplex(std::abs(w), a, 0);
}

DirectedComplex DirectedComplex::from_polar(double modulus, double argument) {
  if (!(modulus > 0.0)) {
    throw DomainError("DirectedComplex: modulus must be positive");
  }
  return DirectedComplex(modulus, argument, 0);
}

double DirectedComplex::principal_argument() const {
  double a = std::remainder(base_, kTwoPi);
  if (half_turns_ % 2 != 0) a += (a > 0.0) ? -kPi : kPi;
  if (a <= -kPi) a = kPi;
  return a;
}

cdouble DirectedComplex::value() const {
  cdouble v = std::polar(modulus_, base_);
  if (half_turns_ % 2 != 0) v = -v;
  return v;
}

DirectedComplex DirectedComplex::rotated(double theta) const {
  if (theta == kPi) return DirectedComplex(modulus_, base_, half_turns_ + 1);
  if (theta == -kPi) return DirectedComplex(modulus_, base_, half_turns_ - 1);
  return DirectedComplex(modulus_, base_ + theta, half_turns_);
}

DirectedComplex DirectedComplex::times(const DirectedComplex& other) const {
  return DirectedComplex(modulus_ * other.modulus_, base_ + other.base_,
                         half_turns_ + other.half_turns_);
}

DirectedComplex DirectedComplex::over(const DirectedComplex& other) const {
  return DirectedComplex(modulus_ / other.modulus_, base_ - other.base_,
                         half_turns_ - other.half_turns_);
}

DirectedComplex DirectedComplex::reciprocal() const {
  return DirectedComplex(1.0 / modulus_, -base_, -half_turns_);
}

cdouble cpow(const DirectedComplex& a, cdouble s) {
  const cdouble log_a(std::log(a.modulus()), a.argument());
  return std::exp(s * log_a);
}

namespace {

// Lanczos approximation, g = 7, 9 terms.  Relative accuracy is about 1e-15
// over the half-plane Re(s) >= 0.5; reflection covers the rest.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool near_nonpositive_integer(cdouble s, double eps) {
  if (std::abs(s.imag()) > eps) return false;
  const double re = s.real();
  if (re > eps) return false;
  return std::abs(re - std::round(re)) <= eps;
}

cdouble gamma_lanczos(cdouble s) {
  // Valid for Re(s) >= 0.5.
  s -= 1.0;
  cdouble acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    acc += kLanczos[i] / (s + static_cast<double>(i));
  }
  const cdouble t = s + kLanczosG + 0.5;
  return std::sqrt(kTwoPi) * std::pow(t, s + 0.5) * std::exp(-t) * acc;
}

} // namespace

cdouble gamma(cdouble s) {
  if (near_nonpositive_integer(s, 1e-12)) {
    throw PoleError("gamma: pole at nonpositive integer");
  }
  if (s.real() < 0.5) {
    // Reflection: gamma(s) = pi / (sin(pi s) * gamma(1 - s)).
    return kPi / (std::sin(kPi * s) * gamma_lanczos(1.0 - s));
  }
  return gamma_lanczos(s);
}

cdouble recip_gamma(cdouble s) {
  if (near_nonpositive_integer(s, 1e-12)) {
    return cdouble(0.0, 0.0);
  }
  if (s.real() < 0.5) {
    return std::sin(kPi * s) * gamma_lanczos(1.0 - s) / kPi;
  }
  return 1.0 / gamma_lanczos(s);
}

} // namespace bzeta
