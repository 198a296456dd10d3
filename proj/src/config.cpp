#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace crowsim {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite");
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value '" + v + "' for " + key);
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return i;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer value '" + v + "' for " + key);
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: bad boolean value '" + v + "' for " + key);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

const std::set<std::string> kKnownKeys = {
    "system.type",      "system.omega",      "system.delta",       "system.gamma",
    "system.omega0_re", "system.omega0_im",  "system.beta1_re",    "system.beta1_im",
    "system.n_cavities", "system.period",    "system.light_speed", "system.matrix_file",
    "state.kind",       "state.u",           "state.phi",          "state.n_th",
    "state.eta_re",     "state.eta_im",      "state.cavity",
    "time.start",       "time.stop",         "time.points",        "time.scaled",
    "report.cavities",  "report.pairs",      "report.mode",        "report.lossless",
    "report.summary_lossless",
    "output.format",    "output.path",       "output.timestamp",
};

}  // namespace

ExperimentConfig config_from_entries(std::vector<std::pair<std::string, std::string>> entries,
                                     const std::string& preset_name) {
  ExperimentConfig c;
  c.preset_name = preset_name;

  bool have_stop = false;
  bool mode_explicit = false;
  for (const auto& [key, value] : entries) {
    if (!kKnownKeys.count(key)) throw ConfigError("config: unknown key '" + key + "'");
    if (key == "system.type") {
      if (value == "two_cavity") c.system = SystemKind::two_cavity;
      else if (value == "crow") c.system = SystemKind::crow;
      else if (value == "general_matrix") c.system = SystemKind::general_matrix;
      else throw ConfigError("config: unknown system.type '" + value + "'");
    } else if (key == "system.omega") c.omega = parse_double(key, value);
    else if (key == "system.delta") c.delta = parse_double(key, value);
    else if (key == "system.gamma") c.gamma = parse_double(key, value);
    else if (key == "system.omega0_re") c.omega0 = Complex(parse_double(key, value), c.omega0.imag());
    else if (key == "system.omega0_im") c.omega0 = Complex(c.omega0.real(), parse_double(key, value));
    else if (key == "system.beta1_re") c.beta1 = Complex(parse_double(key, value), c.beta1.imag());
    else if (key == "system.beta1_im") c.beta1 = Complex(c.beta1.real(), parse_double(key, value));
    else if (key == "system.n_cavities") c.n_cavities = parse_int(key, value);
    else if (key == "system.period") c.period = parse_double(key, value);
    else if (key == "system.light_speed") c.light_speed = parse_double(key, value);
    else if (key == "system.matrix_file") c.matrix_file = value;
    else if (key == "state.kind") {
      if (value == "svs") c.state_kind = StateKind::svs;
      else if (value == "sts") c.state_kind = StateKind::sts;
      else if (value == "coherent") c.state_kind = StateKind::coherent;
      else throw ConfigError("config: unknown state.kind '" + value + "'");
    } else if (key == "state.u") c.u = parse_double(key, value);
    else if (key == "state.phi") c.phi = parse_double(key, value);
    else if (key == "state.n_th") c.n_th = parse_double(key, value);
    else if (key == "state.eta_re") c.eta = Complex(parse_double(key, value), c.eta.imag());
    else if (key == "state.eta_im") c.eta = Complex(c.eta.real(), parse_double(key, value));
    else if (key == "state.cavity") c.excited = parse_int(key, value);
    else if (key == "time.start") c.t_start = parse_double(key, value);
    else if (key == "time.stop") { c.t_stop = parse_double(key, value); have_stop = true; }
    else if (key == "time.points") c.points = parse_int(key, value);
    else if (key == "time.scaled") c.scaled_window = parse_bool(key, value);
    else if (key == "report.cavities") {
      c.cavities.clear();
      for (const auto& tok : split(value, ',')) c.cavities.push_back(parse_int(key, tok));
    } else if (key == "report.pairs") {
      c.pairs.clear();
      for (const auto& tok : split(value, ',')) {
        auto parts = split(tok, ':');
        if (parts.size() != 2) throw ConfigError("config: bad pair '" + tok + "' (want p:p')");
        c.pairs.emplace_back(parse_int(key, parts[0]), parse_int(key, parts[1]));
      }
    } else if (key == "report.mode") {
      if (value == "envelope") c.mode = EvalMode::envelope_min;
      else if (value == "instantaneous") c.mode = EvalMode::instantaneous;
      else throw ConfigError("config: unknown report.mode '" + value + "'");
      mode_explicit = true;
    } else if (key == "report.lossless") c.lossless = parse_bool(key, value);
    else if (key == "report.summary_lossless") c.summary_lossless = parse_bool(key, value);
    else if (key == "output.format") {
      if (value == "csv") c.format = OutputFormat::csv;
      else if (value == "json") c.format = OutputFormat::json;
      else throw ConfigError("config: unknown output.format '" + value + "'");
    } else if (key == "output.path") c.out_path = value;
    else if (key == "output.timestamp") c.timestamp = parse_bool(key, value);
  }

  if (!have_stop) throw ConfigError("config: time.stop is required");
  if (c.points < 2) throw ConfigError("config: time.points must be >= 2");
  if (c.t_start < 0.0) throw ConfigError("config: time.start must be >= 0");
  if (!(c.t_stop > c.t_start)) throw ConfigError("config: time.stop must exceed time.start");

  switch (c.system) {
    case SystemKind::two_cavity:
      if (!(c.omega > 0.0) || !(c.delta > 0.0))
        throw ConfigError("config: two_cavity requires positive system.omega and system.delta");
      if (c.gamma < 0.0) throw ConfigError("config: system.gamma must be >= 0");
      for (int cav : c.cavities)
        if (cav != 0 && cav != 1)
          throw ConfigError("config: two_cavity cavities must be 0 (left) or 1 (right)");
      if (c.excited != 0)
        throw ConfigError("config: two_cavity initial state must sit in cavity 0");
      break;
    case SystemKind::crow:
      if (!(c.omega0.real() > 0.0))
        throw ConfigError("config: crow requires positive Re(omega0)");
      if (c.omega0.imag() > 0.0)
        throw ConfigError("config: crow requires Im(omega0) <= 0");
      if (c.beta1 == Complex(0.0, 0.0))
        throw ConfigError("config: crow requires a nonzero beta1");
      if (!(c.period > 0.0)) throw ConfigError("config: system.period must be > 0");
      if (c.light_speed < 0.0) throw ConfigError("config: system.light_speed must be >= 0");
      break;
    case SystemKind::general_matrix:
      if (c.matrix_file.empty())
        throw ConfigError("config: general_matrix requires system.matrix_file");
      // The mode-sum engine has no common fast phase to extremise over.
      if (c.mode == EvalMode::envelope_min) {
        if (mode_explicit)
          throw ConfigError("config: envelope mode needs a closed-form system "
                            "(two_cavity or crow)");
        c.mode = EvalMode::instantaneous;
      }
      break;
  }

  switch (c.state_kind) {
    case StateKind::svs:
    case StateKind::sts:
      if (c.u < 0.0) throw ConfigError("config: state.u must be >= 0");
      if (c.n_th < 0.0) throw ConfigError("config: state.n_th must be >= 0");
      break;
    case StateKind::coherent:
      break;
  }

  c.entries = std::move(entries);
  return c;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("config: line " + std::to_string(lineno) + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config: line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ParseError("config: line " + std::to_string(lineno) + ": empty key");
    if (!section.empty()) key = section + "." + key;
    entries.emplace_back(key, value);
  }
  return config_from_entries(std::move(entries));
}

namespace {

using Entries = std::vector<std::pair<std::string, std::string>>;

Entries crow_base_entries() {
  return {
      {"system.type", "crow"},
      {"system.omega0_re", "0.305"},
      {"system.omega0_im", "-7.71e-05"},
      {"system.beta1_re", "0.00987"},
      {"system.beta1_im", "-1.97e-05"},
      {"system.period", "1.0"},
      {"system.light_speed", "0.07957747154594767"},
      {"system.n_cavities", "201"},
      {"state.kind", "svs"},
      {"state.u", "0.88"},
      {"state.phi", "0.0"},
      {"state.cavity", "0"},
      {"time.start", "0"},
      {"time.stop", "20"},
      {"time.points", "2000"},
      {"time.scaled", "true"},
      {"report.mode", "envelope"},
      {"output.format", "csv"},
  };
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2", "fig3", "fig4", "fig5"};
  return names;
}

ExperimentConfig preset_config(const std::string& name) {
  Entries e;
  if (name == "fig2") {
    e = {
        {"system.type", "two_cavity"},
        {"system.omega", "1.0"},
        {"system.delta", "0.05"},
        {"system.gamma", "0.001"},
        {"state.kind", "svs"},
        {"state.u", "1.2"},
        {"state.phi", "0.0"},
        {"state.cavity", "0"},
        {"time.start", "0"},
        {"time.stop", "12.566370614359172"},
        {"time.points", "2000"},
        {"time.scaled", "true"},
        {"report.cavities", "0,1"},
        {"report.pairs", "0:1"},
        {"report.mode", "envelope"},
        {"output.format", "csv"},
        {"output.path", "fig2.csv"},
    };
  } else if (name == "fig3") {
    e = crow_base_entries();
    e.emplace_back("report.cavities", "0,2,4,6");
    e.emplace_back("output.path", "fig3.csv");
  } else if (name == "fig4") {
    e = crow_base_entries();
    e.emplace_back("report.cavities", "0,1,2,3,4,5,6,7,8,9,10");
    e.emplace_back("report.pairs",
                   "1:-1,2:-2,3:-3,4:-4,5:-5,6:-6,7:-7,8:-8,9:-9,10:-10");
    e.emplace_back("report.summary_lossless", "true");
    e.emplace_back("output.path", "fig4.csv");
  } else if (name == "fig5") {
    e = crow_base_entries();
    e.emplace_back("report.cavities", "2,4,6");
    e.emplace_back("report.pairs", "2:-2,4:-4,6:-6");
    e.emplace_back("output.path", "fig5.csv");
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return config_from_entries(std::move(e), name);
}

void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  Entries entries = cfg.entries;
  bool replaced = false;
  for (auto& kv : entries) {
    if (kv.first == key) {
      kv.second = value;
      replaced = true;
    }
  }
  if (!replaced) entries.emplace_back(key, value);
  cfg = config_from_entries(std::move(entries), cfg.preset_name);
}

namespace {

Complex parse_complex_pair(const std::string& re, const std::string& im, int lineno, int col) {
  try {
    size_t pos = 0;
    double r = std::stod(re, &pos);
    if (pos != re.size()) throw std::invalid_argument("re");
    double i = std::stod(im, &pos);
    if (pos != im.size()) throw std::invalid_argument("im");
    return {r, i};
  } catch (const std::exception&) {
    throw ParseError("matrix file: line " + std::to_string(lineno) + ", entry " +
                     std::to_string(col) + ": malformed number");
  }
}

}  // namespace

CavityChainSpec load_matrix_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("matrix file: cannot open '" + path + "'");

  int n = 0;
  Complex omega0(0.0, 0.0);
  double period = 1.0;
  std::vector<Complex> cavity_omegas;
  CMatrix a, b;
  int a_rows = 0, b_rows = 0, omega_rows = 0;

  enum class Section { none, omega, a, b } section = Section::none;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("matrix file: line " + std::to_string(lineno) + ": unterminated section");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (n <= 0)
        throw ParseError("matrix file: line " + std::to_string(lineno) + ": n must come first");
      if (name == "omega") section = Section::omega;
      else if (name == "A") { section = Section::a; a = CMatrix(n, n); }
      else if (name == "B") { section = Section::b; b = CMatrix(n, n); }
      else
        throw ParseError("matrix file: line " + std::to_string(lineno) + ": unknown section [" +
                         name + "]");
      continue;
    }

    if (section == Section::none) {
      const size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw ParseError("matrix file: line " + std::to_string(lineno) + ": expected key = value");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      std::istringstream vs(value);
      if (key == "n") {
        try {
          n = std::stoi(value);
        } catch (const std::exception&) {
          throw ParseError("matrix file: line " + std::to_string(lineno) + ": bad n");
        }
        if (n < 1)
          throw DimensionError("matrix file: n must be >= 1");
      } else if (key == "omega0") {
        std::string re, im;
        if (!(vs >> re >> im))
          throw ParseError("matrix file: line " + std::to_string(lineno) + ": omega0 wants re im");
        omega0 = parse_complex_pair(re, im, lineno, 1);
      } else if (key == "period") {
        try {
          period = std::stod(value);
        } catch (const std::exception&) {
          throw ParseError("matrix file: line " + std::to_string(lineno) + ": bad period");
        }
      } else {
        throw ParseError("matrix file: line " + std::to_string(lineno) + ": unknown key '" + key +
                         "'");
      }
      continue;
    }

    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);

    if (section == Section::omega) {
      if (toks.size() != 2)
        throw DimensionError("matrix file: line " + std::to_string(lineno) +
                             ": omega rows want exactly re im");
      cavity_omegas.push_back(parse_complex_pair(toks[0], toks[1], lineno, 1));
      ++omega_rows;
      continue;
    }

    CMatrix& m = (section == Section::a) ? a : b;
    int& rows = (section == Section::a) ? a_rows : b_rows;
    if (rows >= n)
      throw DimensionError("matrix file: line " + std::to_string(lineno) +
                           ": more than n rows in matrix section");
    if (static_cast<int>(toks.size()) != 2 * n)
      throw DimensionError("matrix file: line " + std::to_string(lineno) + ": expected " +
                           std::to_string(2 * n) + " numbers, got " +
                           std::to_string(toks.size()) + " (input not square)");
    for (int j = 0; j < n; ++j)
      m(rows, j) = parse_complex_pair(toks[static_cast<size_t>(2 * j)],
                                      toks[static_cast<size_t>(2 * j + 1)], lineno, j + 1);
    ++rows;
  }

  if (n <= 0) throw ParseError("matrix file: missing n");
  if (a_rows != n || b_rows != n)
    throw DimensionError("matrix file: [A] and [B] must each have exactly n rows");
  if (omega_rows != 0 && omega_rows != n)
    throw DimensionError("matrix file: [omega] must have exactly n rows when present");
  if (omega0 == Complex(0.0, 0.0) && cavity_omegas.empty())
    throw ParseError("matrix file: omega0 (or an [omega] section) is required");

  // Renormalise the overlap diagonal to 1; the coupling matrix scales the
  // same way since both come from the same mode amplitudes.
  std::vector<Complex> s(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) {
    const Complex d = a(q, q);
    if (std::abs(d) < 1e-12)
      throw ParseError("matrix file: overlap diagonal entry " + std::to_string(q) + " is zero");
    s[static_cast<size_t>(q)] = 1.0 / std::sqrt(d);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex f = s[static_cast<size_t>(i)] * s[static_cast<size_t>(j)];
      a(i, j) *= f;
      b(i, j) *= f;
    }
  for (int q = 0; q < n; ++q) a(q, q) = 1.0;

  CavityChainSpec spec;
  spec.n_cavities = n;
  spec.omega0 = cavity_omegas.empty() ? omega0 : cavity_omegas.front();
  spec.period = period;
  spec.cavity_omegas = std::move(cavity_omegas);
  spec.overlap = std::move(a);
  spec.coupling = std::move(b);
  spec.validate();
  return spec;
}

}  // namespace crowsim
