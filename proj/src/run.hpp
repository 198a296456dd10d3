#ifndef CROWSIM_RUN_HPP
#define CROWSIM_RUN_HPP

#include <optional>
#include <string>

#include "config.hpp"
#include "observables.hpp"

namespace crowsim {

struct CavityExtremum {
  int cavity = 0;
  double n_max = 0.0, t_n_max = 0.0;
  double var_x_min = 0.0, t_var_x_min = 0.0;
  bool has_lossless = false;
  double n_max_lossless = 0.0, var_x_min_lossless = 0.0;
};

struct PairExtremum {
  std::pair<int, int> cavities{0, 0};
  double corr_var_min = 0.0, t_corr_var_min = 0.0;
  bool has_lossless = false;
  double corr_var_min_lossless = 0.0;
};

struct RunSummary {
  std::vector<CavityExtremum> cavity_extrema;
  std::vector<PairExtremum> pair_extrema;
  std::optional<double> tau;                 // crow transit time, raw units
  std::optional<double> v_max_over_c;        // needs system.light_speed
  std::optional<double> q_ratio_band_edges;  // Q(k=0) / Q(k=pi/D), lossy only
  std::optional<double> total_photons_end_exact;
  std::optional<double> total_photons_end_approx;
};

struct RunResult {
  ObservableSeries series;
  RunSummary summary;
  double time_scale = 1.0;        // t_scaled = time_scale * t_raw
  std::string time_scale_label;   // "delta_t", "t_over_tau" or "t"
  ExperimentConfig config;
  std::string summary_text;
};

// Dispatch to the engine matching config.system and collect per-cavity /
// per-pair extrema over the emitted series.
RunResult run(const ExperimentConfig& config);

}  // namespace crowsim

#endif
