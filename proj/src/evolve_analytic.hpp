#ifndef CROWSIM_EVOLVE_ANALYTIC_HPP
#define CROWSIM_EVOLVE_ANALYTIC_HPP

#include "observables.hpp"
#include "states.hpp"

namespace crowsim {

// Two coupled cavities with equal decay rates. omega is the upper-branch
// frequency, delta = w_+ - w_- > 0 the splitting.
struct TwoCavityParams {
  double omega = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  void validate() const;
};

// Nearest-neighbour CROW in the Bloch/Bessel regime: zeta1 = omega0 * beta1
// is the complex hopping rate, tau = 1/Re(zeta1) the one-period transit
// time, gamma = -Im(omega0) the single-cavity decay rate.
struct CrowParams {
  Complex zeta1;
  double gamma = 0.0;
  ComplexFrequency omega0;
  double tau = 0.0;
  int c_index = 0;  // label of the excited cavity

  static CrowParams from_couplings(ComplexFrequency omega0, Complex beta1, int c_index);
  void validate() const;
};

namespace evolve_analytic {

// Coefficient in the first-maximum location t_p/tau ~ p + c0 p^{1/3} of the
// order-p Bessel function (large p).
inline constexpr double kArrivalC0 = 0.8;

// Closed forms for both cavities (labels 0 = left holds the initial state,
// 1 = right) and the left-right correlation variance:
//   n_{L,R}     = n_avg/2 e^{-2gt} (1 +- cos dt)
//   var x_{L,R} = 1 + e^{-2gt}(1 +- cos dt)(n_avg +- Re(<aa> e^{-i(2w-d)t}))
//   D^2         = 4 + e^{-2gt}[4 n_avg - 2 Re(<aa>(e^{-2iwt} - e^{-i(2w-2d)t}))]
ObservableSeries two_cavity_series(const TwoCavityParams& params, const InitialStateMoments& state,
                                   const std::vector<double>& times, EvalMode mode);

// Bessel closed forms per cavity offset dp = p - c and pair of offsets:
//   n_p     = n_avg e^{-2gt} |J_dp(zeta1 t)|^2
//   var x_p = 1 + 2 n_p + 2 Re(<aa> (-1)^dp J_dp(zeta1 t)^2 e^{-2i omega0 t})
//   D^2     = 4 + 4 n_avg e^{-2gt}(|J_dp|^2 + |J_dp'|^2)
//               - 8 Re(<aa> e^{-2i omega0 t} i^{dp+dp'} J_dp J_dp')
// Negative orders via parity, J_{-n} = (-1)^n J_n; the integer phasors are
// exact quadrant values, never floating-point trig.
ObservableSeries crow_series(const CrowParams& params, const InitialStateMoments& state,
                             const std::vector<double>& times, const std::vector<int>& offsets,
                             const std::vector<std::pair<int, int>>& pair_offsets, EvalMode mode);

// Total photon number: the exact form n_avg e^{-2gt} I0(2 Im(zeta1 t))
// alongside its small-argument approximation n_avg e^{-2gt}(1 + Im(zeta1 t)^2).
struct TotalPhotonSeries {
  std::vector<double> exact;
  std::vector<double> approx;
};
TotalPhotonSeries total_photons(const CrowParams& params, const InitialStateMoments& state,
                                const std::vector<double>& times);

// First-maximum arrival estimate t_p/tau ~ p + c0 p^{1/3}, p >= 1.
double arrival_time_estimate(int p);

// Effective propagation speed v_p/v_max ~ 1 - c0 p^{-2/3}.
double velocity_ratio_estimate(int p);
// Absolute speed with v_max = period/tau.
double velocity_estimate(int p, double period, double tau);

// Lossless large-p estimates of the per-cavity extrema.
struct AsymptoticMaxima {
  double n_max;          // ~ c1^2 sinh^2(u) / p^{2/3}
  double var_x_min;      // ~ 1 - c1^2 (1 - e^{-2u}) / p^{2/3}
  double corr_var_min;   // ~ 4 (1 - c1^2 (1 - e^{-2u}) / p^{2/3})
};
AsymptoticMaxima asymptotic_maxima(int p, double u);

}  // namespace evolve_analytic

}  // namespace crowsim

#endif
