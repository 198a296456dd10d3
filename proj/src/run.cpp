#include "run.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"
#include "evolve_analytic.hpp"
#include "evolve_general.hpp"
#include "specfun.hpp"

namespace crowsim {

namespace {

InitialStateMoments build_state(const ExperimentConfig& cfg) {
  switch (cfg.state_kind) {
    case StateKind::svs: return svs_moments(cfg.u, cfg.phi, cfg.excited);
    case StateKind::sts: return sts_moments(cfg.u, cfg.phi, cfg.n_th, cfg.excited);
    default: return coherent_moments(cfg.eta, cfg.excited);
  }
}

std::vector<double> time_grid(double start, double stop, int points) {
  std::vector<double> t(static_cast<size_t>(points));
  const double step = (stop - start) / (points - 1);
  for (int i = 0; i < points; ++i) t[static_cast<size_t>(i)] = start + step * i;
  return t;
}

// Keep only the requested cavity/pair columns of a fixed-layout series.
ObservableSeries select_columns(const ObservableSeries& s, const std::vector<int>& cavities,
                                const std::vector<std::pair<int, int>>& pairs) {
  ObservableSeries out;
  out.times = s.times;
  out.cavities = cavities;
  out.pairs = pairs;
  const int nt = static_cast<int>(s.times.size());
  out.photon_number = Grid(nt, static_cast<int>(cavities.size()));
  out.var_x = Grid(nt, static_cast<int>(cavities.size()));
  out.var_y = Grid(nt, static_cast<int>(cavities.size()));
  out.corr_var = Grid(nt, static_cast<int>(pairs.size()));
  for (size_t c = 0; c < cavities.size(); ++c) {
    int src = -1;
    for (size_t k = 0; k < s.cavities.size(); ++k)
      if (s.cavities[k] == cavities[c]) src = static_cast<int>(k);
    if (src < 0) throw ConfigError("requested cavity " + std::to_string(cavities[c]) +
                                   " is not part of this system");
    for (int it = 0; it < nt; ++it) {
      out.photon_number.at(it, static_cast<int>(c)) = s.photon_number.at(it, src);
      out.var_x.at(it, static_cast<int>(c)) = s.var_x.at(it, src);
      out.var_y.at(it, static_cast<int>(c)) = s.var_y.at(it, src);
    }
  }
  for (size_t p = 0; p < pairs.size(); ++p) {
    int src = -1;
    for (size_t k = 0; k < s.pairs.size(); ++k)
      if (s.pairs[k] == pairs[p] ||
          (s.pairs[k].first == pairs[p].second && s.pairs[k].second == pairs[p].first))
        src = static_cast<int>(k);
    if (src < 0) throw ConfigError("requested pair is not part of this system");
    for (int it = 0; it < nt; ++it)
      out.corr_var.at(it, static_cast<int>(p)) = s.corr_var.at(it, src);
  }
  return out;
}

ObservableSeries compute_series(const ExperimentConfig& cfg, bool lossless,
                                const std::vector<double>& times) {
  const InitialStateMoments state = build_state(cfg);
  switch (cfg.system) {
    case SystemKind::two_cavity: {
      TwoCavityParams params{cfg.omega, cfg.delta, lossless ? 0.0 : cfg.gamma};
      ObservableSeries full = evolve_analytic::two_cavity_series(params, state, times, cfg.mode);
      return select_columns(full, cfg.cavities, cfg.pairs);
    }
    case SystemKind::crow: {
      const Complex w0 = lossless ? Complex(cfg.omega0.real(), 0.0) : cfg.omega0;
      const Complex b1 = lossless ? Complex(cfg.beta1.real(), 0.0) : cfg.beta1;
      const CrowParams params = CrowParams::from_couplings(w0, b1, cfg.excited);
      std::vector<int> offsets;
      offsets.reserve(cfg.cavities.size());
      for (int p : cfg.cavities) offsets.push_back(p - cfg.excited);
      std::vector<std::pair<int, int>> pair_offsets;
      pair_offsets.reserve(cfg.pairs.size());
      for (const auto& [p, pp] : cfg.pairs)
        pair_offsets.emplace_back(p - cfg.excited, pp - cfg.excited);
      return evolve_analytic::crow_series(params, state, times, offsets, pair_offsets, cfg.mode);
    }
    default: {
      CavityChainSpec spec = load_matrix_spec(cfg.matrix_file);
      if (lossless) {
        spec.omega0 = Complex(spec.omega0.real(), 0.0);
        for (auto& w : spec.cavity_omegas) w = Complex(w.real(), 0.0);
        for (auto& v : spec.overlap->a) v = Complex(v.real(), 0.0);
        for (auto& v : spec.coupling->a) v = Complex(v.real(), 0.0);
      }
      const QuasimodeBasis basis = solve_generalized_modes(spec);
      return evolve_general::evaluate(basis, state, times, cfg.cavities, cfg.pairs);
    }
  }
}

void scan_extrema(const ObservableSeries& s, RunSummary& summary, bool lossless_pass) {
  for (size_t c = 0; c < s.cavities.size(); ++c) {
    double n_max = -1.0, t_n = 0.0, vx_min = 0.0, t_vx = 0.0;
    bool first = true;
    for (size_t it = 0; it < s.times.size(); ++it) {
      const double n = s.photon_number.at(static_cast<int>(it), static_cast<int>(c));
      const double vx = s.var_x.at(static_cast<int>(it), static_cast<int>(c));
      if (n > n_max) {
        n_max = n;
        t_n = s.times[it];
      }
      if (first || vx < vx_min) {
        vx_min = vx;
        t_vx = s.times[it];
        first = false;
      }
    }
    if (!lossless_pass) {
      CavityExtremum e;
      e.cavity = s.cavities[c];
      e.n_max = n_max;
      e.t_n_max = t_n;
      e.var_x_min = vx_min;
      e.t_var_x_min = t_vx;
      summary.cavity_extrema.push_back(e);
    } else {
      CavityExtremum& e = summary.cavity_extrema[c];
      e.has_lossless = true;
      e.n_max_lossless = n_max;
      e.var_x_min_lossless = vx_min;
    }
  }
  for (size_t p = 0; p < s.pairs.size(); ++p) {
    double cmin = 0.0, t_c = 0.0;
    bool first = true;
    for (size_t it = 0; it < s.times.size(); ++it) {
      const double d2 = s.corr_var.at(static_cast<int>(it), static_cast<int>(p));
      if (first || d2 < cmin) {
        cmin = d2;
        t_c = s.times[it];
        first = false;
      }
    }
    if (!lossless_pass) {
      PairExtremum e;
      e.cavities = s.pairs[p];
      e.corr_var_min = cmin;
      e.t_corr_var_min = t_c;
      summary.pair_extrema.push_back(e);
    } else {
      PairExtremum& e = summary.pair_extrema[p];
      e.has_lossless = true;
      e.corr_var_min_lossless = cmin;
    }
  }
}

std::string build_summary_text(const RunResult& r) {
  std::ostringstream os;
  os.precision(6);
  os << "system: ";
  switch (r.config.system) {
    case SystemKind::two_cavity: os << "two_cavity"; break;
    case SystemKind::crow: os << "crow"; break;
    default: os << "general_matrix"; break;
  }
  if (!r.config.preset_name.empty()) os << " (preset " << r.config.preset_name << ")";
  os << "\n";
  if (r.summary.tau) os << "tau = " << *r.summary.tau << " (raw time units)\n";
  if (r.summary.v_max_over_c) os << "v_max / c = " << *r.summary.v_max_over_c << "\n";
  if (r.summary.q_ratio_band_edges)
    os << "Q(k=0) / Q(k=pi/D) = " << *r.summary.q_ratio_band_edges << "\n";
  if (r.summary.total_photons_end_exact)
    os << "total photons at window end: " << *r.summary.total_photons_end_exact
       << " (quadratic approx " << *r.summary.total_photons_end_approx << ")\n";
  os << "per-cavity extrema (" << r.time_scale_label << "):\n";
  for (const auto& e : r.summary.cavity_extrema) {
    os << "  cavity " << e.cavity << ": n_max = " << e.n_max << " at "
       << e.t_n_max * r.time_scale << ", min var_x = " << e.var_x_min << " at "
       << e.t_var_x_min * r.time_scale;
    if (e.has_lossless)
      os << " [lossless: n_max = " << e.n_max_lossless << ", min var_x = " << e.var_x_min_lossless
         << "]";
    os << "\n";
  }
  for (const auto& e : r.summary.pair_extrema) {
    os << "  pair (" << e.cavities.first << "," << e.cavities.second
       << "): min corr_var = " << e.corr_var_min << " at " << e.t_corr_var_min * r.time_scale
       << (e.corr_var_min < 4.0 ? " (entangled)" : "");
    if (e.has_lossless) os << " [lossless: " << e.corr_var_min_lossless << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace

RunResult run(const ExperimentConfig& cfg) {
  RunResult r;
  r.config = cfg;

  double scale = 1.0;
  switch (cfg.system) {
    case SystemKind::two_cavity:
      scale = cfg.delta;
      r.time_scale_label = "delta_t";
      break;
    case SystemKind::crow: {
      const Complex zeta1 = cfg.omega0 * cfg.beta1;
      if (!(zeta1.real() > 0.0))
        throw ConfigError("config: crow requires Re(omega0*beta1) > 0");
      scale = zeta1.real();  // t/tau = Re(zeta1) * t
      r.time_scale_label = "t_over_tau";
      break;
    }
    default:
      scale = 1.0;
      r.time_scale_label = "t";
      break;
  }
  r.time_scale = scale;

  // The window is declared on the scaled axis unless time.scaled = false.
  const double to_raw = cfg.scaled_window ? 1.0 / scale : 1.0;
  const std::vector<double> times =
      time_grid(cfg.t_start * to_raw, cfg.t_stop * to_raw, cfg.points);

  r.series = compute_series(cfg, cfg.lossless, times);
  scan_extrema(r.series, r.summary, false);
  if (cfg.summary_lossless && !cfg.lossless) {
    const ObservableSeries ll = compute_series(cfg, true, times);
    scan_extrema(ll, r.summary, true);
  }

  if (cfg.system == SystemKind::crow) {
    const Complex zeta1 = cfg.lossless ? Complex((cfg.omega0 * cfg.beta1).real(), 0.0)
                                       : cfg.omega0 * cfg.beta1;
    r.summary.tau = 1.0 / zeta1.real();
    if (cfg.light_speed > 0.0)
      r.summary.v_max_over_c = cfg.period * zeta1.real() / cfg.light_speed;
    if (!cfg.lossless) {
      // Band-edge quality factors from the nearest-neighbour dispersion.
      const Complex w_k0 = cfg.omega0 * (1.0 - cfg.beta1);
      const Complex w_kpi = cfg.omega0 * (1.0 + cfg.beta1);
      if (w_k0.imag() < 0.0 && w_kpi.imag() < 0.0)
        r.summary.q_ratio_band_edges = (w_k0.real() / (2.0 * -w_k0.imag())) /
                                       (w_kpi.real() / (2.0 * -w_kpi.imag()));
    }
    const CrowParams params = CrowParams::from_couplings(
        cfg.lossless ? Complex(cfg.omega0.real(), 0.0) : cfg.omega0,
        cfg.lossless ? Complex(cfg.beta1.real(), 0.0) : cfg.beta1, cfg.excited);
    const auto tot = evolve_analytic::total_photons(params, build_state(cfg), {times.back()});
    r.summary.total_photons_end_exact = tot.exact.front();
    r.summary.total_photons_end_approx = tot.approx.front();
  }

  r.summary_text = build_summary_text(r);
  return r;
}

}  // namespace crowsim
