#include "evolve_analytic.hpp"

#include <cmath>
#include <cstdlib>

#include "errors.hpp"
#include "specfun.hpp"

namespace crowsim {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_times(const std::vector<double>& times) {
  double prev = -1.0;
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0) throw DomainError("times must be finite and >= 0");
    if (t < prev) throw DomainError("times must be ascending");
    prev = t;
  }
}

// e^{i s pi/2} for integer s.
Complex quadrant_phasor(long s) {
  switch (((s % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double parity_sign(int dp) { return (dp % 2 == 0) ? 1.0 : -1.0; }

Complex j_signed(const std::vector<Complex>& j, int dp) {
  const int n = std::abs(dp);
  const Complex v = j[static_cast<size_t>(n)];
  return (dp < 0 && (n & 1)) ? -v : v;
}

}  // namespace

void TwoCavityParams::validate() const {
  if (!std::isfinite(omega) || !std::isfinite(delta) || !std::isfinite(gamma))
    throw SpecError("TwoCavityParams: non-finite parameters");
  if (!(delta > 0.0)) throw SpecError("TwoCavityParams: delta must be > 0");
  if (gamma < 0.0) throw SpecError("TwoCavityParams: gamma must be >= 0");
  if (!(omega > delta)) throw SpecError("TwoCavityParams: omega must exceed delta");
}

CrowParams CrowParams::from_couplings(ComplexFrequency omega0, Complex beta1, int c_index) {
  CrowParams p;
  p.omega0 = omega0;
  p.zeta1 = omega0 * beta1;
  p.gamma = -omega0.imag();
  if (!(p.zeta1.real() > 0.0)) throw SpecError("CrowParams: Re(omega0*beta1) must be > 0");
  p.tau = 1.0 / p.zeta1.real();
  p.c_index = c_index;
  return p;
}

void CrowParams::validate() const {
  if (!finite(zeta1) || !finite(omega0) || !std::isfinite(gamma) || !std::isfinite(tau))
    throw SpecError("CrowParams: non-finite parameters");
  if (!(tau > 0.0)) throw SpecError("CrowParams: tau must be > 0");
  if (gamma < 0.0) throw SpecError("CrowParams: gamma must be >= 0");
}

namespace evolve_analytic {

ObservableSeries two_cavity_series(const TwoCavityParams& params, const InitialStateMoments& state,
                                   const std::vector<double>& times, EvalMode mode) {
  params.validate();
  check_times(times);
  if (state.excited_index != 0)
    throw SpecError("two_cavity_series: the initial state must sit in the left cavity (label 0)");

  const int n_times = static_cast<int>(times.size());
  ObservableSeries out;
  out.times = times;
  out.cavities = {0, 1};
  out.pairs = {{0, 1}};
  out.photon_number = Grid(n_times, 2);
  out.var_x = Grid(n_times, 2);
  out.var_y = Grid(n_times, 2);
  out.corr_var = Grid(n_times, 1);

  const double n_avg = state.n_avg;
  const Complex anom = state.anom;
  const double aabs = std::abs(anom);
  const double w = params.omega, d = params.delta, g = params.gamma;

  for (int it = 0; it < n_times; ++it) {
    const double t = times[static_cast<size_t>(it)];
    const double decay = std::exp(-2.0 * g * t);
    const double cosd = std::cos(d * t);
    const double wl = decay * (1.0 + cosd);  // weight, left cavity
    const double wr = decay * (1.0 - cosd);  // weight, right cavity

    out.photon_number.at(it, 0) = 0.5 * n_avg * wl;
    out.photon_number.at(it, 1) = 0.5 * n_avg * wr;

    // Anomalous contribution at the fast phase (2w - d)t. The envelope
    // extremises the phase per cavity: the sign in front of the fast term
    // differs between left and right, so each cavity has its own optimum.
    double ix_l, ix_r, iy_l, iy_r;  // inner brackets of var_x / var_y
    switch (mode) {
      case EvalMode::instantaneous: {
        const double ph = (2.0 * w - d) * t;
        const double r = (anom * Complex(std::cos(ph), -std::sin(ph))).real();
        ix_l = n_avg + r;
        ix_r = n_avg - r;
        iy_l = n_avg - r;
        iy_r = n_avg + r;
        break;
      }
      case EvalMode::envelope_min:
        ix_l = ix_r = n_avg - aabs;
        iy_l = iy_r = n_avg + aabs;
        break;
      default:
        ix_l = ix_r = n_avg + aabs;
        iy_l = iy_r = n_avg - aabs;
        break;
    }
    out.var_x.at(it, 0) = 1.0 + wl * ix_l;
    out.var_x.at(it, 1) = 1.0 + wr * ix_r;
    out.var_y.at(it, 0) = 1.0 + wl * iy_l;
    out.var_y.at(it, 1) = 1.0 + wr * iy_r;

    double cross;  // Re(<aa>(e^{-2iwt} - e^{-i(2w-2d)t})) or extremal value
    switch (mode) {
      case EvalMode::instantaneous: {
        const double p1 = 2.0 * w * t;
        const double p2 = (2.0 * w - 2.0 * d) * t;
        cross = (anom * (Complex(std::cos(p1), -std::sin(p1)) -
                         Complex(std::cos(p2), -std::sin(p2))))
                    .real();
        break;
      }
      case EvalMode::envelope_min:
        cross = aabs * 2.0 * std::abs(std::sin(d * t));
        break;
      default:
        cross = -aabs * 2.0 * std::abs(std::sin(d * t));
        break;
    }
    out.corr_var.at(it, 0) = 4.0 + decay * (4.0 * n_avg - 2.0 * cross);
  }
  return out;
}

ObservableSeries crow_series(const CrowParams& params, const InitialStateMoments& state,
                             const std::vector<double>& times, const std::vector<int>& offsets,
                             const std::vector<std::pair<int, int>>& pair_offsets, EvalMode mode) {
  params.validate();
  check_times(times);

  int max_order = 0;
  for (int dp : offsets) max_order = std::max(max_order, std::abs(dp));
  for (const auto& [a, b] : pair_offsets) {
    if (a == b) throw PairError("correlation pair must involve two distinct cavities");
    max_order = std::max({max_order, std::abs(a), std::abs(b)});
  }
  if (!times.empty() && std::abs(params.zeta1) * times.back() > specfun::kMaxAbsArg)
    throw DomainError("crow_series: |zeta1 * t| exceeds the supported Bessel range");

  const int n_times = static_cast<int>(times.size());
  const int n_cav = static_cast<int>(offsets.size());
  ObservableSeries out;
  out.times = times;
  out.cavities.reserve(offsets.size());
  for (int dp : offsets) out.cavities.push_back(params.c_index + dp);
  for (const auto& [a, b] : pair_offsets)
    out.pairs.emplace_back(params.c_index + a, params.c_index + b);
  out.photon_number = Grid(n_times, n_cav);
  out.var_x = Grid(n_times, n_cav);
  out.var_y = Grid(n_times, n_cav);
  out.corr_var = Grid(n_times, static_cast<int>(pair_offsets.size()));

  const double n_avg = state.n_avg;
  const Complex anom = state.anom;
  const double aabs = std::abs(anom);

  for (int it = 0; it < n_times; ++it) {
    const double t = times[static_cast<size_t>(it)];
    const double decay = std::exp(-2.0 * params.gamma * t);
    const auto j = specfun::bessel_j_orders(max_order, params.zeta1 * t);

    // e^{-2 i omega0 t} carries the e^{-2 gamma t} magnitude.
    Complex fast(0.0, 0.0);
    if (mode == EvalMode::instantaneous) {
      const double ph = -2.0 * params.omega0.real() * t;
      fast = decay * Complex(std::cos(ph), std::sin(ph));
    }

    for (int s = 0; s < n_cav; ++s) {
      const int dp = offsets[static_cast<size_t>(s)];
      const Complex jdp = j[static_cast<size_t>(std::abs(dp))];
      const double j2 = std::norm(jdp);
      const double n_p = n_avg * decay * j2;
      out.photon_number.at(it, s) = n_p;
      double a;
      switch (mode) {
        case EvalMode::instantaneous:
          a = (anom * parity_sign(dp) * (jdp * jdp) * fast).real();
          break;
        case EvalMode::envelope_min: a = -aabs * decay * j2; break;
        default: a = aabs * decay * j2; break;
      }
      out.var_x.at(it, s) = 1.0 + 2.0 * n_p + 2.0 * a;
      out.var_y.at(it, s) = 1.0 + 2.0 * n_p - 2.0 * a;
    }

    for (size_t ip = 0; ip < pair_offsets.size(); ++ip) {
      const int da = pair_offsets[ip].first;
      const int db = pair_offsets[ip].second;
      const Complex ja = j_signed(j, da);
      const Complex jb = j_signed(j, db);
      const double base = 4.0 * n_avg * decay * (std::norm(ja) + std::norm(jb));
      double cross;
      switch (mode) {
        case EvalMode::instantaneous:
          cross = (anom * fast * quadrant_phasor(da + db) * ja * jb).real();
          break;
        case EvalMode::envelope_min: cross = aabs * decay * std::abs(ja * jb); break;
        default: cross = -aabs * decay * std::abs(ja * jb); break;
      }
      out.corr_var.at(it, static_cast<int>(ip)) = 4.0 + base - 8.0 * cross;
    }
  }
  return out;
}

TotalPhotonSeries total_photons(const CrowParams& params, const InitialStateMoments& state,
                                const std::vector<double>& times) {
  params.validate();
  check_times(times);
  TotalPhotonSeries out;
  out.exact.reserve(times.size());
  out.approx.reserve(times.size());
  for (double t : times) {
    const double decay = std::exp(-2.0 * params.gamma * t);
    const double im = params.zeta1.imag() * t;
    out.exact.push_back(state.n_avg * decay * specfun::bessel_i0(std::abs(2.0 * im)));
    out.approx.push_back(state.n_avg * decay * (1.0 + im * im));
  }
  return out;
}

double arrival_time_estimate(int p) {
  if (p < 1) throw DomainError("arrival_time_estimate: p must be >= 1");
  return p + kArrivalC0 * std::cbrt(static_cast<double>(p));
}

double velocity_ratio_estimate(int p) {
  if (p < 1) throw DomainError("velocity_ratio_estimate: p must be >= 1");
  return 1.0 - kArrivalC0 * std::pow(static_cast<double>(p), -2.0 / 3.0);
}

double velocity_estimate(int p, double period, double tau) {
  if (!(period > 0.0) || !(tau > 0.0))
    throw DomainError("velocity_estimate: period and tau must be > 0");
  return (period / tau) * velocity_ratio_estimate(p);
}

AsymptoticMaxima asymptotic_maxima(int p, double u) {
  if (p < 1) throw DomainError("asymptotic_maxima: p must be >= 1");
  if (!std::isfinite(u) || u < 0.0) throw DomainError("asymptotic_maxima: u must be >= 0");
  const double c1 = specfun::airy_constant_c1();
  const double p23 = std::pow(static_cast<double>(p), 2.0 / 3.0);
  const double sh = std::sinh(u);
  AsymptoticMaxima m;
  m.n_max = c1 * c1 * sh * sh / p23;
  m.var_x_min = 1.0 - c1 * c1 * (1.0 - std::exp(-2.0 * u)) / p23;
  m.corr_var_min = 4.0 * m.var_x_min;
  return m;
}

}  // namespace evolve_analytic

}  // namespace crowsim
