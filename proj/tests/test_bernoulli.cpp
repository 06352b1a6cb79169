#include <doctest.h>

#include <cmath>
#include <vector>

#include "bzeta/bernoulli.hpp"
#include "oracles.hpp"

using namespace bzeta;

namespace {

double rel(cdouble a, cdouble b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

// Recurrence oracle: sum_{k=0}^{m} C(m+1, k) B_k = 0, evaluated in extended
// precision.  Loses accuracy slowly with m; trustworthy to ~1e-12 relative
// through m ~ 30.
std::vector<long double> bernoulli_recurrence(int mmax) {
  std::vector<long double> B(mmax + 1, 0.0L);
  B[0] = 1.0L;
  for (int m = 1; m <= mmax; ++m) {
    // C(m+1, k) running binomial.
    long double acc = 0.0L;
    long double binom = 1.0L; // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      acc += binom * B[k];
      binom = binom * static_cast<long double>(m + 1 - k) / static_cast<long double>(k + 1);
    }
    B[m] = -acc / static_cast<long double>(m + 1);
  }
  return B;
}

ParameterVector pv(std::initializer_list<cdouble> vals) {
  return ParameterVector::from_values(std::vector<cdouble>(vals));
}

} // namespace

TEST_CASE("classical Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1.0);
  CHECK(bernoulli_number(1) == -0.5);
  CHECK(bernoulli_number(3) == 0.0);
  CHECK(bernoulli_number(17) == 0.0);

  const auto B = bernoulli_recurrence(30);
  CHECK(bernoulli_number(2) == doctest::Approx(static_cast<double>(B[2])).epsilon(1e-14));
  for (int m = 2; m <= 30; m += 2) {
    CHECK(rel(bernoulli_number(m), static_cast<double>(B[m])) < 1e-12);
  }
  CHECK_THROWS_AS(bernoulli_number(66), RangeError);
  CHECK_THROWS_AS(bernoulli_number(-1), RangeError);
}

TEST_CASE("large Bernoulli numbers against the zeta product") {
  // Independent route: |B_2n| = 2 (2n)! zeta(2n) / (2 pi)^{2n}.
  for (int m = 20; m <= 64; m += 2) {
    long double fact = 1.0L;
    for (int j = 1; j <= m; ++j) fact *= static_cast<long double>(j);
    long double zeta = 0.0L;
    for (int k = 40; k >= 1; --k) zeta += powl(static_cast<long double>(k), -m);
    const long double mag = 2.0L * fact * zeta / powl(2.0L * static_cast<long double>(kPi), m);
    const double expected = static_cast<double>((m / 2 % 2 == 1 ? 1.0L : -1.0L) * mag);
    CHECK(rel(bernoulli_number(m), expected) < 1e-13);
  }
}

TEST_CASE("truncated series multiplication is associative") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t L = 8;
    TruncatedSeries f(L), g(L), h(L);
    for (std::size_t i = 0; i <= L; ++i) {
      f[i] = cdouble(rng.uniform(-1, 1), rng.uniform(-1, 1));
      g[i] = cdouble(rng.uniform(-1, 1), rng.uniform(-1, 1));
      h[i] = cdouble(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    const auto a = (f * g) * h;
    const auto b = f * (g * h);
    for (std::size_t i = 0; i <= L; ++i) {
      CHECK(std::abs(a[i] - b[i]) < 1e-13 * (1.0 + std::abs(a[i])));
    }
  }
}

TEST_CASE("multiple Bernoulli closed forms") {
  oracle::Rng rng(32);
  // B_{r,0} = 1 / prod omega.
  for (int r = 1; r <= 4; ++r) {
    std::vector<cdouble> ws;
    for (int i = 0; i < r; ++i) {
      ws.emplace_back(rng.uniform(0.3, 2.0), rng.uniform(0.2, 2.0));
    }
    auto w = ParameterVector::from_values(ws);
    cdouble prod(1.0, 0.0);
    for (const auto& v : ws) prod *= v;
    const cdouble z(rng.uniform(-1, 1), rng.uniform(-1, 1));
    CHECK(rel(multiple_bernoulli(r, 0, z, w), 1.0 / prod) < 1e-13);
  }

  // B_{2,2} from its explicit coefficients.
  const cdouble w1(0.7, 0.4), w2(-0.2, 1.1), z(0.3, -0.6);
  auto w = pv({w1, w2});
  const cdouble expected = z * z / (w1 * w2) - (w1 + w2) * z / (w1 * w2) +
                           (w1 * w1 + w2 * w2 + 3.0 * w1 * w2) / (6.0 * w1 * w2);
  CHECK(rel(multiple_bernoulli(2, 2, z, w), expected) < 1e-12);

  // B_{1,1}(z | 1) = z - 1/2.
  auto one = pv({cdouble(1.0, 0.0)});
  CHECK(rel(multiple_bernoulli(1, 1, cdouble(0.37, 0.0), one), cdouble(-0.13, 0.0)) < 1e-13);

  // B_{1,2}(z | 1) is the classical B_2(z) = z^2 - z + 1/6.
  CHECK(rel(multiple_bernoulli(1, 2, cdouble(1.0, 0.0), one), cdouble(1.0 / 6.0, 0.0)) <
        1e-13);
}

TEST_CASE("polynomial form matches pointwise evaluation") {
  oracle::Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 1 + trial % 4;
    const int n = trial % 9;
    std::vector<cdouble> ws;
    for (int i = 0; i < r; ++i) {
      ws.emplace_back(rng.uniform(0.3, 1.5), rng.uniform(0.3, 1.5));
    }
    auto w = ParameterVector::from_values(ws);
    const auto poly = multiple_bernoulli_poly(r, n, w);
    REQUIRE(static_cast<int>(poly.coeffs_in_z.size()) == n + 1);
    // Leading coefficient comes from e^{zt} alone: 1 / prod omega.
    cdouble prod(1.0, 0.0);
    for (const auto& v : ws) prod *= v;
    CHECK(rel(poly.coeffs_in_z[n], 1.0 / prod) < 1e-12);
    const cdouble z0(rng.uniform(-2, 2), rng.uniform(-2, 2));
    CHECK(rel(poly.eval(z0), multiple_bernoulli(r, n, z0, w)) < 1e-12);
  }
}

TEST_CASE("symmetry in the omegas") {
  const cdouble z(0.4, 0.2);
  auto w = pv({cdouble(0.5, 0.8), cdouble(1.1, 0.3), cdouble(-0.2, 0.9)});
  auto wp = pv({cdouble(1.1, 0.3), cdouble(-0.2, 0.9), cdouble(0.5, 0.8)});
  for (int n = 0; n <= 6; ++n) {
    CHECK(rel(multiple_bernoulli(3, n, z, w), multiple_bernoulli(3, n, z, wp)) < 1e-11);
  }
}

TEST_CASE("structural identities") {
  oracle::Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + trial % 4;
    const int n = 1 + trial % 8;
    std::vector<cdouble> ws;
    for (int i = 0; i < r; ++i) {
      ws.emplace_back(rng.uniform(0.4, 1.6), rng.uniform(0.3, 1.4));
    }
    auto w = ParameterVector::from_values(ws);
    const cdouble z(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    const int j = 1 + trial % r;
    const cdouble wj = ws[j - 1];
    const double tol = 1e-10;

    // Homogeneity: B_{r,n}(cz | c omega) = c^{n-r} B_{r,n}(z | omega).
    const cdouble c(rng.uniform(0.5, 2.0), rng.uniform(-0.5, 0.5));
    std::vector<cdouble> cw;
    for (const auto& v : ws) cw.push_back(c * v);
    CHECK(rel(multiple_bernoulli(r, n, c * z, ParameterVector::from_values(cw)),
              std::pow(c, cdouble(n - r, 0.0)) * multiple_bernoulli(r, n, z, w)) < tol);

    // Reflection: B_{r,n}(|w|+ - z) = (-1)^n B_{r,n}(z).
    cdouble wsum(0.0, 0.0);
    for (const auto& v : ws) wsum += v;
    CHECK(rel(multiple_bernoulli(r, n, wsum - z, w),
              (n % 2 == 0 ? 1.0 : -1.0) * multiple_bernoulli(r, n, z, w)) < tol);

    // Difference: B_{r,n}(z + w_j) - B_{r,n}(z) = n B_{r-1,n-1}(z | hat j).
    const cdouble diff =
        multiple_bernoulli(r, n, z + wj, w) - multiple_bernoulli(r, n, z, w);
    const cdouble rhs =
        static_cast<double>(n) * multiple_bernoulli(r - 1, n - 1, z, w.hat(j));
    CHECK(std::abs(diff - rhs) < tol * (1.0 + std::abs(rhs)));

    // Negation (plain numeric negation of entry j).
    std::vector<cdouble> wneg = ws;
    wneg[j - 1] = -wneg[j - 1];
    auto wn = ParameterVector::from_values(wneg);
    CHECK(rel(multiple_bernoulli(r, n, z, wn),
              -multiple_bernoulli(r, n, z + wj, w)) < tol);

    // Sum rule.
    const cdouble sum_lhs =
        multiple_bernoulli(r, n, z, w) + multiple_bernoulli(r, n, z, wn);
    const cdouble sum_rhs =
        -static_cast<double>(n) * multiple_bernoulli(r - 1, n - 1, z, w.hat(j));
    CHECK(std::abs(sum_lhs - sum_rhs) < tol * (1.0 + std::abs(sum_rhs)));

    // Derivative, through the polynomial coefficients.
    const auto p = multiple_bernoulli_poly(r, n, w);
    const auto q = multiple_bernoulli_poly(r, n - 1, w);
    for (int i = 1; i <= n; ++i) {
      const cdouble deriv_coeff = static_cast<double>(i) * p.coeffs_in_z[i];
      const cdouble expected = static_cast<double>(n) * q.coeffs_in_z[i - 1];
      CHECK(std::abs(deriv_coeff - expected) < tol * (1.0 + std::abs(expected)));
    }
  }
}
