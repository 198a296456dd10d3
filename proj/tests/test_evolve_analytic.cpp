#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../src/errors.hpp"
#include "../src/evolve_analytic.hpp"
#include "../src/evolve_general.hpp"
#include "../src/specfun.hpp"

using namespace crowsim;
namespace ea = evolve_analytic;
namespace eg = evolve_general;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> t(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
  return t;
}

QuasimodeBasis two_mode_basis(double omega, double delta, double gamma) {
  QuasimodeBasis b;
  b.frequencies = {Complex(omega, -gamma), Complex(omega - delta, -gamma)};
  b.coefficients = CMatrix(2, 2);
  const double r = 1.0 / std::numbers::sqrt2;
  b.coefficients(0, 0) = r;
  b.coefficients(0, 1) = r;
  b.coefficients(1, 0) = r;
  b.coefficients(1, 1) = -r;
  b.cavity_labels = {0, 1};
  return b;
}

// Worst pointwise mismatch relative to the column, with a floor tied to the
// column's peak so that values at the rounding floor do not dominate.
double worst_rel(const Grid& a, const Grid& b, int col, double floor_frac) {
  double peak = 0.0;
  for (int it = 0; it < a.rows; ++it) peak = std::max(peak, std::abs(a.at(it, col)));
  const double floor = std::max(peak * floor_frac, 1e-300);
  double worst = 0.0;
  for (int it = 0; it < a.rows; ++it) {
    const double denom = std::max(std::abs(a.at(it, col)), floor);
    worst = std::max(worst, std::abs(a.at(it, col) - b.at(it, col)) / denom);
  }
  return worst;
}

}  // namespace

TEST_CASE("two-cavity closed forms match the mode-sum engine") {
  const TwoCavityParams params{1.0, 0.05, 0.001};
  auto state = svs_moments(1.2, 0.0, 0);
  auto times = linspace(0.0, 4.0 * std::numbers::pi / params.delta, 1000);

  auto analytic = ea::two_cavity_series(params, state, times, EvalMode::instantaneous);
  auto basis = two_mode_basis(params.omega, params.delta, params.gamma);
  auto general = eg::evaluate(basis, state, times, {0, 1}, {{0, 1}});

  for (int c = 0; c < 2; ++c) {
    CHECK(worst_rel(analytic.photon_number, general.photon_number, c, 1e-12) <= 1e-10);
    CHECK(worst_rel(analytic.var_x, general.var_x, c, 1e-12) <= 1e-10);
    CHECK(worst_rel(analytic.var_y, general.var_y, c, 1e-12) <= 1e-10);
  }
  CHECK(worst_rel(analytic.corr_var, general.corr_var, 0, 1e-12) <= 1e-10);
}

TEST_CASE("two-cavity basics") {
  const TwoCavityParams params{1.0, 0.05, 0.0};
  auto state = svs_moments(1.2, 0.0, 0);
  auto times = linspace(0.0, 500.0, 777);
  auto s = ea::two_cavity_series(params, state, times, EvalMode::instantaneous);

  SUBCASE("lossless photon numbers sum to the initial value") {
    for (size_t it = 0; it < times.size(); ++it) {
      const double total =
          s.photon_number.at(static_cast<int>(it), 0) + s.photon_number.at(static_cast<int>(it), 1);
      CHECK(std::abs(total - state.n_avg) <= 1e-13 * state.n_avg);
    }
  }

  SUBCASE("state must start in the left cavity") {
    auto wrong = svs_moments(1.2, 0.0, 1);
    CHECK_THROWS_AS(ea::two_cavity_series(params, wrong, times, EvalMode::instantaneous),
                    SpecError);
  }

  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(ea::two_cavity_series({1.0, -0.05, 0.0}, state, times,
                                          EvalMode::instantaneous),
                    SpecError);
    CHECK_THROWS_AS(ea::two_cavity_series({0.01, 0.05, 0.0}, state, times,
                                          EvalMode::instantaneous),
                    SpecError);
  }
}

TEST_CASE("envelope brackets the instantaneous values") {
  const TwoCavityParams params{1.0, 0.05, 0.001};
  auto state = svs_moments(1.2, 0.3, 0);
  auto times = linspace(0.0, 4.0 * std::numbers::pi / params.delta, 4001);
  auto lo = ea::two_cavity_series(params, state, times, EvalMode::envelope_min);
  auto hi = ea::two_cavity_series(params, state, times, EvalMode::envelope_max);
  auto mid = ea::two_cavity_series(params, state, times, EvalMode::instantaneous);
  for (size_t it = 0; it < times.size(); ++it) {
    for (int c = 0; c < 2; ++c) {
      CHECK(lo.var_x.at(static_cast<int>(it), c) <= mid.var_x.at(static_cast<int>(it), c) + 1e-12);
      CHECK(mid.var_x.at(static_cast<int>(it), c) <= hi.var_x.at(static_cast<int>(it), c) + 1e-12);
    }
    CHECK(lo.corr_var.at(static_cast<int>(it), 0) <= mid.corr_var.at(static_cast<int>(it), 0) + 1e-12);
    CHECK(mid.corr_var.at(static_cast<int>(it), 0) <= hi.corr_var.at(static_cast<int>(it), 0) + 1e-12);
  }
  // The envelope keeps the uncertainty product legal as well.
  for (size_t it = 0; it < times.size(); ++it)
    for (int c = 0; c < 2; ++c)
      CHECK(lo.var_x.at(static_cast<int>(it), c) * lo.var_y.at(static_cast<int>(it), c) >=
            1.0 - 1e-8);
}

TEST_CASE("crow closed forms match the mode-sum engine on a 64-ring") {
  const Complex w0(0.305, -7.71e-5);
  const Complex b1(0.00987, -1.97e-5);
  const CrowParams params = CrowParams::from_couplings(w0, b1, 0);
  auto state = svs_moments(0.88, 0.0, 0);
  auto times = linspace(0.0, 8.0 * params.tau, 400);

  std::vector<int> offsets;
  for (int dp = -6; dp <= 6; ++dp) offsets.push_back(dp);
  std::vector<std::pair<int, int>> pairs = {{1, -1}, {3, -3}, {2, 5}};

  auto analytic = ea::crow_series(params, state, times, offsets, pairs, EvalMode::instantaneous);

  CavityChainSpec spec;
  spec.n_cavities = 64;
  spec.omega0 = w0;
  spec.beta1 = b1;
  auto basis = crow_bloch_modes(spec);
  auto general = eg::evaluate(basis, state, times, analytic.cavities, analytic.pairs);

  for (size_t c = 0; c < offsets.size(); ++c) {
    CHECK(worst_rel(analytic.photon_number, general.photon_number, static_cast<int>(c), 1e-10) <= 1e-8);
    CHECK(worst_rel(analytic.var_x, general.var_x, static_cast<int>(c), 1e-10) <= 1e-8);
    CHECK(worst_rel(analytic.var_y, general.var_y, static_cast<int>(c), 1e-10) <= 1e-8);
  }
  for (size_t p = 0; p < pairs.size(); ++p)
    CHECK(worst_rel(analytic.corr_var, general.corr_var, static_cast<int>(p), 1e-10) <= 1e-8);
}

TEST_CASE("crow series properties") {
  const Complex w0(0.305, -7.71e-5);
  const Complex b1(0.00987, -1.97e-5);
  const CrowParams params = CrowParams::from_couplings(w0, b1, 0);
  auto state = svs_moments(0.88, 0.0, 0);

  SUBCASE("initial instant at the excited cavity") {
    auto s = ea::crow_series(params, state, {0.0}, {0, 3}, {}, EvalMode::instantaneous);
    CHECK(s.photon_number.at(0, 0) == doctest::Approx(state.n_avg).epsilon(1e-14));
    CHECK(s.var_x.at(0, 0) == doctest::Approx(std::exp(-1.76)).epsilon(1e-13));
    CHECK(s.photon_number.at(0, 1) == 0.0);
  }

  SUBCASE("symmetric offsets carry identical photon numbers") {
    auto times = linspace(0.0, 12.0 * params.tau, 300);
    auto s = ea::crow_series(params, state, times, {5, -5}, {}, EvalMode::instantaneous);
    for (size_t it = 0; it < times.size(); ++it)
      CHECK(s.photon_number.at(static_cast<int>(it), 0) ==
            s.photon_number.at(static_cast<int>(it), 1));
  }

  SUBCASE("lossless partial sums reach the initial photon number") {
    const CrowParams ll = CrowParams::from_couplings(Complex(w0.real(), 0.0),
                                                     Complex(b1.real(), 0.0), 0);
    const double t = 10.0 * ll.tau;
    const int pmax = static_cast<int>(std::ceil(10.0)) + 40;
    std::vector<int> offsets;
    for (int dp = -pmax; dp <= pmax; ++dp) offsets.push_back(dp);
    auto s = ea::crow_series(ll, state, {t}, offsets, {}, EvalMode::instantaneous);
    double total = 0.0;
    for (size_t c = 0; c < offsets.size(); ++c) total += s.photon_number.at(0, static_cast<int>(c));
    CHECK(std::abs(total - state.n_avg) <= 1e-10);
  }

  SUBCASE("pair needs distinct offsets") {
    CHECK_THROWS_AS(ea::crow_series(params, state, {0.0}, {0}, {{2, 2}}, EvalMode::instantaneous),
                    PairError);
  }

  SUBCASE("argument range guard") {
    const CrowParams big = CrowParams::from_couplings(Complex(1.0, 0.0), Complex(1.0, 0.0), 0);
    CHECK_THROWS_AS(ea::crow_series(big, state, {2.0e4}, {0}, {}, EvalMode::instantaneous),
                    DomainError);
  }
}

TEST_CASE("total photon number") {
  const Complex w0(0.305, -7.71e-5);
  const Complex b1(0.00987, -1.97e-5);
  auto state = svs_moments(0.88, 0.0, 0);

  SUBCASE("lossless total is constant") {
    const CrowParams ll =
        CrowParams::from_couplings(Complex(w0.real(), 0.0), Complex(b1.real(), 0.0), 0);
    auto tot = ea::total_photons(ll, state, linspace(0.0, 20.0 * ll.tau, 50));
    for (double v : tot.exact) CHECK(v == doctest::Approx(state.n_avg).epsilon(1e-14));
  }

  SUBCASE("starts at the initial photon number") {
    const CrowParams params = CrowParams::from_couplings(w0, b1, 0);
    auto tot = ea::total_photons(params, state, {0.0});
    CHECK(tot.exact[0] == doctest::Approx(state.n_avg).epsilon(1e-14));
    CHECK(tot.approx[0] == doctest::Approx(state.n_avg).epsilon(1e-14));
  }

  SUBCASE("quadratic approximation is tight over the window") {
    const CrowParams params = CrowParams::from_couplings(w0, b1, 0);
    auto tot = ea::total_photons(params, state, {20.0 * params.tau});
    CHECK(std::abs(tot.approx[0] - tot.exact[0]) / tot.exact[0] <= 1e-3);
  }

  SUBCASE("decay wins over the Bessel growth at these couplings") {
    const CrowParams params = CrowParams::from_couplings(w0, b1, 0);
    auto tot = ea::total_photons(params, state, linspace(0.0, 20.0 * params.tau, 500));
    for (size_t i = 1; i < tot.exact.size(); ++i)
      CHECK(tot.exact[i] <= tot.exact[i - 1] + 1e-12);
  }
}

TEST_CASE("arrival-time and velocity estimators") {
  SUBCASE("low order value") {
    CHECK(ea::arrival_time_estimate(1) == doctest::Approx(1.8).epsilon(1e-12));
  }

  SUBCASE("estimate tracks the scanned first maximum of |J_p|") {
    for (int p : {6, 10, 27}) {
      double best_x = 0.0, best = -1.0;
      const double hi = p + 8.0 * std::cbrt(static_cast<double>(p));
      for (double x = 0.5; x <= hi; x += 1e-3) {
        const double v = std::abs(specfun::bessel_j(p, {x, 0.0}));
        if (v > best) {
          best = v;
          best_x = x;
        }
      }
      const double est = ea::arrival_time_estimate(p);
      CHECK(std::abs(est - best_x) / best_x <= 0.02);
    }
  }

  SUBCASE("velocity ratio") {
    CHECK(ea::velocity_ratio_estimate(8) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(ea::velocity_ratio_estimate(1000000) > 0.999);
    CHECK(ea::velocity_estimate(8, 2.0, 4.0) == doctest::Approx(0.4).epsilon(1e-12));
  }

  SUBCASE("domain guards") {
    CHECK_THROWS_AS(ea::arrival_time_estimate(0), DomainError);
    CHECK_THROWS_AS(ea::velocity_ratio_estimate(0), DomainError);
  }
}

TEST_CASE("asymptotic extremum estimates") {
  SUBCASE("vacuum limit") {
    auto m = ea::asymptotic_maxima(7, 0.0);
    CHECK(m.n_max == 0.0);
    CHECK(m.var_x_min == 1.0);
    CHECK(m.corr_var_min == 4.0);
  }

  SUBCASE("p^{-2/3} scaling") {
    for (int p : {2, 5, 11}) {
      auto a = ea::asymptotic_maxima(p, 0.9);
      auto b = ea::asymptotic_maxima(8 * p, 0.9);
      CHECK(b.n_max / a.n_max == doctest::Approx(0.25).epsilon(1e-12));
      CHECK((1.0 - b.var_x_min) / (1.0 - a.var_x_min) == doctest::Approx(0.25).epsilon(1e-12));
      CHECK((4.0 - b.corr_var_min) / (4.0 - a.corr_var_min) == doctest::Approx(0.25).epsilon(1e-12));
    }
  }

  SUBCASE("agreement with lossless scans at p = 10") {
    const double u = 0.88;
    auto est = ea::asymptotic_maxima(10, u);
    double j2max = 0.0;
    for (double x = 0.5; x <= 25.0; x += 1e-3)
      j2max = std::max(j2max, std::norm(specfun::bessel_j(10, {x, 0.0})));
    const double n_avg = std::sinh(u) * std::sinh(u);
    const double aabs = std::cosh(u) * std::sinh(u);
    const double n_true = n_avg * j2max;
    const double vx_true = 1.0 - 2.0 * (aabs - n_avg) * j2max;
    const double cv_true = 4.0 - 8.0 * (aabs - n_avg) * j2max;
    CHECK(std::abs(est.n_max - n_true) / n_true <= 0.10);
    CHECK(std::abs((1.0 - est.var_x_min) - (1.0 - vx_true)) / (1.0 - vx_true) <= 0.10);
    CHECK(std::abs((4.0 - est.corr_var_min) - (4.0 - cv_true)) / (4.0 - cv_true) <= 0.10);
  }
}
