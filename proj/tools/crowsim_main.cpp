// crowsim command-line front end. Talks to the simulation core exclusively
// through the C API in crowsim/crowsim.h.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crowsim/crowsim.h"

namespace {

struct CommonFlags {
  std::string format;  // "", "csv", "json"
  std::string out;
  std::string mode;  // "", "envelope", "instantaneous"
  bool lossless = false;
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "Output format (csv|json)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", f.out, "Output file path");
  cmd->add_option("--mode", f.mode, "Fast-phase handling (envelope|instantaneous)")
      ->check(CLI::IsMember({"envelope", "instantaneous"}));
  cmd->add_flag("--lossless", f.lossless, "Zero all decay rates before running");
  cmd->add_flag("--no-timestamp", f.no_timestamp,
                "Omit the timestamp from JSON metadata (byte-identical reruns)");
}

int fail(crowsim_status st) {
  std::fprintf(stderr, "crowsim: error: %s\n", crowsim_last_error());
  return static_cast<int>(st);
}

using ConfigPtr = std::unique_ptr<crowsim_config, decltype(&crowsim_config_free)>;
using ResultPtr = std::unique_ptr<crowsim_result, decltype(&crowsim_result_free)>;

int apply_flags(crowsim_config* cfg, const CommonFlags& f) {
  crowsim_status st = CROWSIM_OK;
  if (!f.format.empty()) st = crowsim_config_set(cfg, "output.format", f.format.c_str());
  if (st == CROWSIM_OK && !f.out.empty())
    st = crowsim_config_set(cfg, "output.path", f.out.c_str());
  if (st == CROWSIM_OK && !f.mode.empty())
    st = crowsim_config_set(cfg, "report.mode", f.mode.c_str());
  if (st == CROWSIM_OK && f.lossless)
    st = crowsim_config_set(cfg, "report.lossless", "true");
  if (st == CROWSIM_OK && f.no_timestamp)
    st = crowsim_config_set(cfg, "output.timestamp", "false");
  return static_cast<int>(st);
}

int run_and_write(crowsim_config* cfg) {
  crowsim_result* raw = nullptr;
  crowsim_status st = crowsim_run(cfg, &raw);
  if (st != CROWSIM_OK) return fail(st);
  ResultPtr res(raw, &crowsim_result_free);
  st = crowsim_result_write(res.get(), nullptr, nullptr);
  if (st != CROWSIM_OK) return fail(st);
  std::fputs(crowsim_result_summary(res.get()), stdout);
  return 0;
}

// out.csv -> out_state.u=0.5.csv
std::string sweep_path(const std::string& base, const std::string& key, const std::string& value) {
  const size_t dot = base.find_last_of('.');
  const size_t slash = base.find_last_of('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  const std::string stem = has_ext ? base.substr(0, dot) : base;
  const std::string ext = has_ext ? base.substr(dot) : "";
  return stem + "_" + key + "=" + value + ext;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squeezed-state evolution in lossy coupled-cavity chains"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(crowsim_version()));

  std::string config_path, preset_name, sweep_param, sweep_values;
  CommonFlags run_flags, preset_flags, sweep_flags;

  CLI::App* cmd_run = app.add_subcommand("run", "Run an experiment described by a config file");
  cmd_run->add_option("config", config_path, "Config file")->required();
  add_common(cmd_run, run_flags);

  CLI::App* cmd_preset = app.add_subcommand(
      "preset", std::string("Run a built-in preset (") + crowsim_preset_names() + ")");
  cmd_preset->add_option("name", preset_name, "Preset name")->required();
  add_common(cmd_preset, preset_flags);

  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "Vary one config entry over a list of values, one output each");
  cmd_sweep->add_option("config", config_path, "Config file (or use --preset)");
  cmd_sweep->add_option("--preset", preset_name, "Sweep a built-in preset instead of a file");
  cmd_sweep->add_option("--param", sweep_param, "Config key to vary, e.g. state.u")->required();
  cmd_sweep->add_option("--values", sweep_values, "Comma-separated list of values")->required();
  add_common(cmd_sweep, sweep_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help/version/message
    return rc == 0 ? 0 : static_cast<int>(CROWSIM_ERR_CONFIG);
  }

  if (cmd_run->parsed() || cmd_preset->parsed()) {
    const bool from_preset = cmd_preset->parsed();
    crowsim_config* raw = nullptr;
    crowsim_status st = from_preset ? crowsim_config_preset(preset_name.c_str(), &raw)
                                    : crowsim_config_load(config_path.c_str(), &raw);
    if (st != CROWSIM_OK) return fail(st);
    ConfigPtr cfg(raw, &crowsim_config_free);
    if (int rc = apply_flags(cfg.get(), from_preset ? preset_flags : run_flags); rc != 0)
      return fail(static_cast<crowsim_status>(rc));
    return run_and_write(cfg.get());
  }

  // sweep
  if (config_path.empty() == preset_name.empty()) {
    std::fprintf(stderr, "crowsim: sweep needs exactly one of <config> or --preset\n");
    return static_cast<int>(CROWSIM_ERR_CONFIG);
  }
  std::vector<std::string> values;
  std::string cur;
  for (char c : sweep_values) {
    if (c == ',') {
      values.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  values.push_back(cur);

  for (const std::string& value : values) {
    crowsim_config* raw = nullptr;
    crowsim_status st = preset_name.empty() ? crowsim_config_load(config_path.c_str(), &raw)
                                            : crowsim_config_preset(preset_name.c_str(), &raw);
    if (st != CROWSIM_OK) return fail(st);
    ConfigPtr cfg(raw, &crowsim_config_free);
    if (int rc = apply_flags(cfg.get(), sweep_flags); rc != 0)
      return fail(static_cast<crowsim_status>(rc));
    st = crowsim_config_set(cfg.get(), sweep_param.c_str(), value.c_str());
    if (st != CROWSIM_OK) return fail(st);

    crowsim_result* rraw = nullptr;
    st = crowsim_run(cfg.get(), &rraw);
    if (st != CROWSIM_OK) return fail(st);
    ResultPtr res(rraw, &crowsim_result_free);

    std::string base = sweep_flags.out;
    if (base.empty()) base = "sweep.csv";
    const std::string path = sweep_path(base, sweep_param, value);
    st = crowsim_result_write(res.get(), path.c_str(), nullptr);
    if (st != CROWSIM_OK) return fail(st);
    std::printf("%s = %s -> %s\n", sweep_param.c_str(), value.c_str(), path.c_str());
  }
  return 0;
}
