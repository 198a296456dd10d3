#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace crowsim {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string pair_tag(const std::pair<int, int>& p) {
  return std::to_string(p.first) + "_" + std::to_string(p.second);
}

double sd_of(double var) { return std::sqrt(std::max(0.0, var)); }

}  // namespace

void write_csv(const RunResult& r, std::ostream& out) {
  const ObservableSeries& s = r.series;
  out << "t_raw,t_scaled";
  for (int c : s.cavities) {
    const std::string l = std::to_string(c);
    out << ",n_" << l << ",var_x_" << l << ",var_y_" << l << ",sd_x_" << l << ",sd_y_" << l;
  }
  for (const auto& p : s.pairs)
    out << ",corrvar_" << pair_tag(p) << ",entangled_" << pair_tag(p);
  out << "\n";

  if (s.cavities.empty() && s.pairs.empty()) return;  // header-only

  for (size_t it = 0; it < s.times.size(); ++it) {
    const double t = s.times[it];
    out << fmt17(t) << "," << fmt17(t * r.time_scale);
    for (size_t c = 0; c < s.cavities.size(); ++c) {
      const double vx = s.var_x.at(static_cast<int>(it), static_cast<int>(c));
      const double vy = s.var_y.at(static_cast<int>(it), static_cast<int>(c));
      out << "," << fmt17(s.photon_number.at(static_cast<int>(it), static_cast<int>(c))) << ","
          << fmt17(vx) << "," << fmt17(vy) << "," << fmt17(sd_of(vx)) << "," << fmt17(sd_of(vy));
    }
    for (size_t p = 0; p < s.pairs.size(); ++p) {
      const double d2 = s.corr_var.at(static_cast<int>(it), static_cast<int>(p));
      out << "," << fmt17(d2) << "," << (d2 < 4.0 ? 1 : 0);
    }
    out << "\n";
  }
}

void write_json(const RunResult& r, std::ostream& out, bool with_timestamp) {
  using json = nlohmann::ordered_json;
  const ObservableSeries& s = r.series;

  json j;
  j["format"] = "crowsim-series";
  j["version"] = "0.1.0";
  if (with_timestamp) j["generated_at"] = utc_now();
  if (!r.config.preset_name.empty()) j["preset"] = r.config.preset_name;

  json cfg = json::object();
  for (const auto& [k, v] : r.config.entries) cfg[k] = v;
  j["config"] = cfg;

  j["units"] = {{"time_raw", "radian"}, {"time_scaled", r.time_scale_label}};
  j["time_scale"] = r.time_scale;

  json summary = json::object();
  if (r.summary.tau) summary["tau"] = *r.summary.tau;
  if (r.summary.v_max_over_c) summary["v_max_over_c"] = *r.summary.v_max_over_c;
  if (r.summary.q_ratio_band_edges)
    summary["q_ratio_band_edges"] = *r.summary.q_ratio_band_edges;
  if (r.summary.total_photons_end_exact) {
    summary["total_photons_end_exact"] = *r.summary.total_photons_end_exact;
    summary["total_photons_end_approx"] = *r.summary.total_photons_end_approx;
  }
  json cav = json::array();
  for (const auto& e : r.summary.cavity_extrema) {
    json je = {{"cavity", e.cavity},
               {"n_max", e.n_max},
               {"t_n_max", e.t_n_max},
               {"var_x_min", e.var_x_min},
               {"t_var_x_min", e.t_var_x_min}};
    if (e.has_lossless) {
      je["n_max_lossless"] = e.n_max_lossless;
      je["var_x_min_lossless"] = e.var_x_min_lossless;
    }
    cav.push_back(je);
  }
  summary["cavity_extrema"] = cav;
  json prs = json::array();
  for (const auto& e : r.summary.pair_extrema) {
    json je = {{"pair", {e.cavities.first, e.cavities.second}},
               {"corr_var_min", e.corr_var_min},
               {"t_corr_var_min", e.t_corr_var_min}};
    if (e.has_lossless) je["corr_var_min_lossless"] = e.corr_var_min_lossless;
    prs.push_back(je);
  }
  summary["pair_extrema"] = prs;
  j["summary"] = summary;

  json series;
  series["t_raw"] = s.times;
  json scaled = json::array();
  for (double t : s.times) scaled.push_back(t * r.time_scale);
  series["t_scaled"] = scaled;
  series["cavities"] = s.cavities;

  auto grid_columns = [&s](const Grid& g) {
    json cols = json::array();
    for (int c = 0; c < g.cols; ++c) {
      json col = json::array();
      for (size_t it = 0; it < s.times.size(); ++it) col.push_back(g.at(static_cast<int>(it), c));
      cols.push_back(col);
    }
    return cols;
  };
  series["photon_number"] = grid_columns(s.photon_number);
  series["var_x"] = grid_columns(s.var_x);
  series["var_y"] = grid_columns(s.var_y);
  json sdx = json::array(), sdy = json::array();
  for (int c = 0; c < s.var_x.cols; ++c) {
    json cx = json::array(), cy = json::array();
    for (size_t it = 0; it < s.times.size(); ++it) {
      cx.push_back(sd_of(s.var_x.at(static_cast<int>(it), c)));
      cy.push_back(sd_of(s.var_y.at(static_cast<int>(it), c)));
    }
    sdx.push_back(cx);
    sdy.push_back(cy);
  }
  series["sd_x"] = sdx;
  series["sd_y"] = sdy;

  json jpairs = json::array();
  for (const auto& p : s.pairs) jpairs.push_back({p.first, p.second});
  series["pairs"] = jpairs;
  series["corr_var"] = grid_columns(s.corr_var);
  json ent = json::array();
  for (int p = 0; p < s.corr_var.cols; ++p) {
    json col = json::array();
    for (size_t it = 0; it < s.times.size(); ++it)
      col.push_back(s.corr_var.at(static_cast<int>(it), p) < 4.0 ? 1 : 0);
    ent.push_back(col);
  }
  series["entangled"] = ent;
  j["series"] = series;

  out << j.dump(1) << "\n";
}

void write_result(const RunResult& r, const std::string& path_override,
                  const std::string& format_override) {
  const std::string path = path_override.empty() ? r.config.out_path : path_override;
  OutputFormat format = r.config.format;
  if (!format_override.empty()) {
    if (format_override == "csv") format = OutputFormat::csv;
    else if (format_override == "json") format = OutputFormat::json;
    else throw ConfigError("unknown output format '" + format_override + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  if (format == OutputFormat::csv) write_csv(r, out);
  else write_json(r, out, r.config.timestamp);
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace crowsim
