#ifndef CROWSIM_CONFIG_HPP
#define CROWSIM_CONFIG_HPP

#include <string>
#include <utility>
#include <vector>

#include "modes.hpp"
#include "observables.hpp"
#include "types.hpp"

namespace crowsim {

enum class SystemKind { two_cavity, crow, general_matrix };
enum class StateKind { svs, sts, coherent };
enum class OutputFormat { csv, json };

// One experiment: system + initial state + time grid + what to report.
// `entries` carries the declarative key/value form the config was built
// from; it is echoed into output metadata and is sufficient to re-run.
struct ExperimentConfig {
  SystemKind system = SystemKind::two_cavity;

  StateKind state_kind = StateKind::svs;
  double u = 0.0;
  double phi = 0.0;
  double n_th = 0.0;
  Complex eta;
  int excited = 0;

  double omega = 0.0, delta = 0.0, gamma = 0.0;  // two_cavity

  Complex omega0, beta1;  // crow
  int n_cavities = 0;
  double period = 1.0;
  double light_speed = 0.0;  // speed of light in sim units; 0 = not given

  std::string matrix_file;  // general_matrix

  double t_start = 0.0, t_stop = 0.0;
  int points = 2;
  bool scaled_window = true;  // start/stop in delta*t (two-cavity) or t/tau (crow)

  std::vector<int> cavities;
  std::vector<std::pair<int, int>> pairs;
  EvalMode mode = EvalMode::envelope_min;
  bool lossless = false;
  bool summary_lossless = false;  // add lossless extrema columns to the summary

  OutputFormat format = OutputFormat::csv;
  std::string out_path = "series.csv";
  bool timestamp = true;

  std::vector<std::pair<std::string, std::string>> entries;
  std::string preset_name;
};

// Interpret ordered key/value entries (section.key form) into a validated
// config. Throws ConfigError on unknown keys or invalid values.
ExperimentConfig config_from_entries(std::vector<std::pair<std::string, std::string>> entries,
                                     const std::string& preset_name = "");

// Parse an INI-style file: [section] headers, key = value lines, '#'
// comments. Throws ParseError / ConfigError.
ExperimentConfig load_config_file(const std::string& path);

ExperimentConfig preset_config(const std::string& name);
const std::vector<std::string>& preset_names();

// Replace (or add) one entry and re-validate.
void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// Matrix-file reader feeding the generalized eigenproblem. Expected layout:
//   n = <size>
//   omega0 = <re> <im>
//   period = <D>            (optional)
//   [omega]                 (optional, n rows "re im" of per-cavity frequencies)
//   [A]                     (n rows of n "re im" pairs)
//   [B]                     (same shape)
// The overlap matrix is renormalised so its diagonal is exactly 1.
CavityChainSpec load_matrix_spec(const std::string& path);

}  // namespace crowsim

#endif
