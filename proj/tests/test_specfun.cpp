#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "../src/errors.hpp"
#include "../src/specfun.hpp"

using crowsim::Complex;
using crowsim::DomainError;
namespace sf = crowsim::specfun;

namespace {

using CL = std::complex<long double>;

// Test-side oracle: plain ascending series in extended precision, written
// independently of the library path (fixed-count tail, no early adaptive
// exit). Valid wherever the series converges without exhausting the
// long-double mantissa, i.e. moderate |z|.
CL oracle_series_j(int n, CL z) {
  const CL zh = z * 0.5L;
  CL pref = 1.0L;
  for (int k = 1; k <= n; ++k) pref *= zh / static_cast<long double>(k);
  CL sum = 0.0L;
  CL term = pref;
  for (int k = 0; k < 400; ++k) {
    sum += term;
    term *= -(zh * zh) / static_cast<long double>((k + 1) * (n + k + 1LL));
  }
  return sum;
}

long double oracle_series_i0(long double x) {
  long double sum = 0.0L, term = 1.0L;
  const long double q = x * x / 4.0L;
  for (int k = 0; k < 1200; ++k) {
    sum += term;
    term *= q / (static_cast<long double>(k + 1) * (k + 1));
    if (term < 1e-30L * sum) break;
  }
  return sum;
}

double rel_err(Complex got, Complex want) {
  double scale = std::max(1e-300, std::abs(want));
  return std::abs(got - want) / scale;
}

struct RefPoint {
  int n;
  Complex z;
  Complex value;
};

// Reference values computed with mpmath 1.3 (besselj/besseli, 40 digits).
const RefPoint kRef[] = {
    {0, {0.0, 1.0}, {1.26606587775200834, 0.0}},
    {1, {2.0, 0.0}, {0.576724807756873387, 0.0}},
    {0, {2.0, 0.0}, {0.223890779141235668, 0.0}},
    {5, {3.0, 4.0}, {-0.985236173497738446, -0.594265541210494398}},
    {12, {15.0, -0.5}, {0.246691474858220337, 0.045040962426766452}},
    {0, {30.0, 0.0}, {-0.0863679835810402113, 0.0}},
    {7, {25.0, 2.0}, {-0.0551616989130056449, -0.5402613984439011}},
    {30, {40.0, -3.0}, {-0.392696696792861696, -0.409018551404014299}},
    {2, {0.1, 0.0}, {0.00124895865879991898, 0.0}},
    {64, {35.0, 0.0}, {2.10804859518611624e-12, 0.0}},
    {1, {48.0, -8.0}, {-30.6372077139015762, 167.496943850197652}},
    {0, {21.0, 0.5}, {0.0401856008662079297, -0.0891902837936591375}},
    {150, {120.0, 1.0}, {2.62301316202911994e-8, 2.47886318192281253e-8}},
    {4, {-3.0, 2.0}, {-0.0556996956718211653, -0.348311447636001767}},
    {0, {0.0, 300.0}, {4.47584736793505212e+128, 0.0}},
    {3, {25.0, 60.0}, {1.58849756656237959e+24, -5.06538636726303261e+24}},
    {12, {-40.0, -95.0}, {-2.68747718966542648e+39, -2.5938858374938886e+39}},
    {1, {5.0, -30.0}, {-747235851320.038532, -157028907008.005028}},
};

}  // namespace

TEST_CASE("bessel_j trivial arguments") {
  CHECK(sf::bessel_j(0, {0.0, 0.0}) == Complex(1.0, 0.0));
  CHECK(sf::bessel_j(3, {0.0, 0.0}) == Complex(0.0, 0.0));
}

TEST_CASE("bessel_j at i equals I0(1)") {
  Complex j0i = sf::bessel_j(0, {0.0, 1.0});
  long double i0 = oracle_series_i0(1.0L);
  CHECK(rel_err(j0i, Complex(static_cast<double>(i0), 0.0)) < 1e-12);
}

TEST_CASE("bessel_j against test-side series oracle, |z| <= 20") {
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> mag(0.05, 20.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  std::uniform_int_distribution<int> order(0, 24);
  for (int i = 0; i < 300; ++i) {
    double r = mag(rng), th = ang(rng);
    Complex z(r * std::cos(th), r * std::sin(th));
    int n = order(rng);
    Complex want(oracle_series_j(n, CL(z)));
    if (std::abs(want) < 1e-250) continue;
    CHECK(rel_err(sf::bessel_j(n, z), want) < 1e-10);
  }
  // The spec'd example point J_1(2).
  Complex want(oracle_series_j(1, CL(2.0L, 0.0L)));
  CHECK(rel_err(sf::bessel_j(1, {2.0, 0.0}), want) < 1e-12);
}

TEST_CASE("bessel_j against frozen reference values") {
  for (const auto& p : kRef) {
    INFO("n=", p.n, " z=", p.z.real(), "+", p.z.imag(), "i");
    CHECK(rel_err(sf::bessel_j(p.n, p.z), p.value) < 1e-10);
  }
}

TEST_CASE("bessel_j_orders matches single-order path") {
  for (Complex z : {Complex(7.5, -0.3), Complex(33.0, 1.2), Complex(0.0, 0.0)}) {
    auto all = sf::bessel_j_orders(16, z);
    REQUIRE(all.size() == 17);
    for (int n = 0; n <= 16; ++n) {
      Complex one = sf::bessel_j(n, z);
      CHECK(std::abs(all[static_cast<size_t>(n)] - one) <= 1e-12 * std::max(1.0, std::abs(one)));
    }
  }
}

TEST_CASE("three-term recurrence residual") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> mag(0.1, 50.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  std::uniform_int_distribution<int> order(1, 20);
  for (int i = 0; i < 250; ++i) {
    double r = mag(rng), th = ang(rng);
    Complex z(r * std::cos(th), r * std::sin(th));
    int n = order(rng);
    auto j = sf::bessel_j_orders(n + 1, z);
    Complex lhs = j[static_cast<size_t>(n - 1)] + j[static_cast<size_t>(n + 1)] -
                  (2.0 * n / z) * j[static_cast<size_t>(n)];
    CHECK(std::abs(lhs) <= 1e-8 * std::max(1.0, std::abs(j[static_cast<size_t>(n)])));
  }
}

TEST_CASE("Neumann sum of squares reaches unity on the real axis") {
  for (double x : {0.5, 3.7, 12.0, 27.5, 49.0}) {
    int pmax = static_cast<int>(std::ceil(x)) + 40;
    auto j = sf::bessel_j_orders(pmax, {x, 0.0});
    double s = std::norm(j[0]);
    for (int p = 1; p <= pmax; ++p) s += 2.0 * std::norm(j[static_cast<size_t>(p)]);
    CHECK(std::abs(s - 1.0) <= 1e-10);
  }
}

TEST_CASE("real argument gives real values") {
  for (double x = 0.0; x <= 50.0; x += 1.37) {
    auto j = sf::bessel_j_orders(20, {x, 0.0});
    for (const auto& v : j) CHECK(std::abs(v.imag()) <= 1e-12);
  }
}

TEST_CASE("bessel_j domain errors") {
  CHECK_THROWS_AS(sf::bessel_j(-1, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(sf::bessel_j(513, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(sf::bessel_j(0, {1.1e4, 0.0}), DomainError);
  CHECK_THROWS_AS(sf::bessel_j(0, {std::nan(""), 0.0}), DomainError);
  // In range but the value exceeds double range: reported, not silently inf.
  CHECK_THROWS_AS(sf::bessel_j(0, {0.0, 800.0}), DomainError);
}

TEST_CASE("bessel_i0 values and consistency") {
  CHECK(sf::bessel_i0(0.0) == 1.0);
  CHECK(std::abs(sf::bessel_i0(1.0) - static_cast<double>(oracle_series_i0(1.0L))) <= 1e-12);
  // Frozen mpmath value.
  CHECK(std::abs(sf::bessel_i0(1.0) - 1.2660658777520084) <= 1e-13);
  // Root relation: J_0(i x) = I_0(x).
  Complex j = sf::bessel_j(0, {0.0, 2.0});
  CHECK(rel_err({sf::bessel_i0(2.0), 0.0}, j) < 1e-12);
  CHECK(std::abs(j.imag()) < 1e-12);
  // Large-argument sanity against frozen mpmath value.
  double big = sf::bessel_i0(700.0);
  CHECK(std::abs(big / 1.5295933476718737e302 - 1.0) < 1e-11);
}

TEST_CASE("bessel_i0 domain errors") {
  CHECK_THROWS_AS(sf::bessel_i0(-0.5), DomainError);
  CHECK_THROWS_AS(sf::bessel_i0(1.0e3 + 1.0), DomainError);
  CHECK_THROWS_AS(sf::bessel_i0(900.0), DomainError);  // overflows double
}

TEST_CASE("airy constant") {
  double c1 = sf::airy_constant_c1();
  CHECK(std::abs(c1 - 0.67) < 0.005);
  CHECK(std::abs(c1 * c1 - 0.449) < 0.01);
  CHECK(c1 == sf::airy_constant_c1());
  // Frozen mpmath value of 2^{1/3} Ai(-2^{1/3} * 0.8).
  CHECK(std::abs(c1 - 0.67484472386707383) < 1e-15);
}
