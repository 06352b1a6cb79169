#include "bzeta/bernoulli.hpp"

#include <array>
#include <cmath>

namespace bzeta {

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  const std::size_t L = order();
  TruncatedSeries out(L);
  for (std::size_t i = 0; i <= L; ++i) {
    if (coeffs_[i] == cdouble(0.0, 0.0)) continue;
    for (std::size_t j = 0; i + j <= L && j <= other.order(); ++j) {
      out[i + j] += coeffs_[i] * other[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::exp_zt(cdouble z, std::size_t order) {
  TruncatedSeries s(order);
  cdouble term(1.0, 0.0);
  s[0] = term;
  for (std::size_t m = 1; m <= order; ++m) {
    term *= z / static_cast<double>(m);
    s[m] = term;
  }
  return s;
}

TruncatedSeries TruncatedSeries::bernoulli_factor(cdouble w, std::size_t order) {
  TruncatedSeries s(order);
  cdouble wpow(1.0, 0.0);
  double fact = 1.0;
  for (std::size_t m = 0; m <= order; ++m) {
    if (m > 0) {
      wpow *= w;
      fact *= static_cast<double>(m);
    }
    s[m] = bernoulli_number(static_cast<int>(m)) * wpow / fact;
  }
  return s;
}

namespace {

// Exact int64 rationals through B_34; beyond that the zeta-product route
// below delivers ~15 digits.
struct Rational {
  long long num;
  long long den;
};

constexpr std::array<Rational, 18> kEvenBernoulli = {{
    {1, 1},                      // B_0
    {1, 6},                      // B_2
    {-1, 30},                    // B_4
    {1, 42},                     // B_6
    {-1, 30},                    // B_8
    {5, 66},                     // B_10
    {-691, 2730},                // B_12
    {7, 6},                      // B_14
    {-3617, 510},                // B_16
    {43867, 798},                // B_18
    {-174611, 330},              // B_20
    {854513, 138},               // B_22
    {-236364091, 2730},          // B_24
    {8553103, 6},                // B_26
    {-23749461029LL, 870},       // B_28
    {8615841276005LL, 14322},    // B_30
    {-7709321041217LL, 510},     // B_32
    {2577687858367LL, 6},        // B_34
}};

// |B_2n| = 2 (2n)! zeta(2n) / (2 pi)^{2n}, sign (-1)^{n+1}.
double bernoulli_via_zeta(int m) {
  double zeta = 0.0;
  for (int k = 60; k >= 1; --k) {
    zeta += std::pow(static_cast<double>(k), -static_cast<double>(m));
  }
  double ratio = 2.0; // running 2 * m! / (2 pi)^m
  for (int j = 1; j <= m; ++j) {
    ratio *= static_cast<double>(j) / kTwoPi;
  }
  const double sign = (m / 2 % 2 == 1) ? 1.0 : -1.0;
  return sign * ratio * zeta;
}

} // namespace

double bernoulli_number(int m) {
  if (m < 0 || m > 64) {
    throw RangeError("bernoulli_number: m must be in [0, 64]");
  }
  if (m == 1) return -0.5;
  if (m % 2 == 1) return 0.0;
  const int idx = m / 2;
  if (idx < static_cast<int>(kEvenBernoulli.size())) {
    const Rational& q = kEvenBernoulli[idx];
    return static_cast<double>(q.num) / static_cast<double>(q.den);
  }
  static const std::array<double, 15> tail = [] {
    std::array<double, 15> t{};
    for (int i = 0; i < 15; ++i) t[i] = bernoulli_via_zeta(36 + 2 * i);
    return t;
  }();
  return tail[(m - 36) / 2];
}

namespace {

void validate_request(int r, int n, const ParameterVector& omegas) {
  if (r < 0 || static_cast<std::size_t>(r) != omegas.size()) {
    throw DomainError("multiple_bernoulli: r must equal the number of omegas");
  }
  if (n < 0 || n > 60) {
    throw RangeError("multiple_bernoulli: n must be in [0, 60]");
  }
  for (const auto& w : omegas.entries()) {
    (void)w; // modulus > 0 by construction of DirectedComplex
  }
}

// prod_j (w_j t)/(e^{w_j t} - 1) truncated at the given order.
TruncatedSeries generating_product(const ParameterVector& omegas, std::size_t order) {
  TruncatedSeries acc(order);
  acc[0] = cdouble(1.0, 0.0);
  for (const auto& w : omegas.entries()) {
    acc = acc * TruncatedSeries::bernoulli_factor(w.value(), order);
  }
  return acc;
}

} // namespace

cdouble multiple_bernoulli(int r, int n, cdouble z, const ParameterVector& omegas) {
  validate_request(r, n, omegas);
  const std::size_t order = static_cast<std::size_t>(n);
  TruncatedSeries s = generating_product(omegas, order) *
                      TruncatedSeries::exp_zt(z, order);
  double nfact = 1.0;
  for (int j = 2; j <= n; ++j) nfact *= static_cast<double>(j);
  return nfact * s[order] / omegas.prod();
}

std::vector<cdouble> multiple_bernoulli_over_fact(int K, cdouble z,
                                                  const ParameterVector& omegas) {
  validate_request(static_cast<int>(omegas.size()), K, omegas);
  const std::size_t order = static_cast<std::size_t>(K);
  TruncatedSeries s = generating_product(omegas, order) *
                      TruncatedSeries::exp_zt(z, order);
  const cdouble wprod = omegas.prod();
  std::vector<cdouble> out(order + 1);
  for (std::size_t k = 0; k <= order; ++k) out[k] = s[k] / wprod;
  return out;
}

cdouble BernoulliPoly::eval(cdouble z) const {
  cdouble acc(0.0, 0.0);
  for (std::size_t i = coeffs_in_z.size(); i-- > 0;) {
    acc = acc * z + coeffs_in_z[i];
  }
  return acc;
}

BernoulliPoly multiple_bernoulli_poly(int r, int n, const ParameterVector& omegas) {
  validate_request(r, n, omegas);
  const std::size_t order = static_cast<std::size_t>(n);
  const TruncatedSeries p = generating_product(omegas, order);
  const cdouble wprod = omegas.prod();

  BernoulliPoly poly;
  poly.r = r;
  poly.n = n;
  poly.omegas = omegas;
  poly.coeffs_in_z.assign(order + 1, cdouble(0.0, 0.0));
  // [t^n] P(t) e^{zt} = sum_j P_{n-j} z^j / j!, so the z^j coefficient of
  // B_{r,n} is n! P_{n-j} / (j! |omega|^x).
  double nfact = 1.0;
  for (int j = 2; j <= n; ++j) nfact *= static_cast<double>(j);
  double jfact = 1.0;
  for (std::size_t j = 0; j <= order; ++j) {
    if (j > 0) jfact *= static_cast<double>(j);
    poly.coeffs_in_z[j] = nfact * p[order - j] / (jfact * wprod);
  }
  return poly;
}

} // namespace bzeta
