#include "crowsim/crowsim.h"

#include <memory>
#include <string>

#include "config.hpp"
#include "errors.hpp"
#include "run.hpp"
#include "serialize.hpp"

extern "C" {

struct crowsim_config {
  crowsim::ExperimentConfig rep;
};

struct crowsim_result {
  crowsim::RunResult rep;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

crowsim_status status_of(const crowsim::Error& e) {
  switch (e.kind()) {
    case crowsim::ErrorKind::config: return CROWSIM_ERR_CONFIG;
    case crowsim::ErrorKind::io: return CROWSIM_ERR_IO;
    default: return CROWSIM_ERR_ENGINE;
  }
}

template <typename Fn>
crowsim_status guarded(crowsim_status default_fail, Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CROWSIM_OK;
  } catch (const crowsim::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return default_fail;
  } catch (...) {
    g_last_error = "unknown error";
    return default_fail;
  }
}

std::string joined_preset_names() {
  std::string s;
  for (const auto& n : crowsim::preset_names()) {
    if (!s.empty()) s += ",";
    s += n;
  }
  return s;
}

}  // namespace

const char* crowsim_version(void) { return "0.1.0"; }

const char* crowsim_preset_names(void) {
  static const std::string names = joined_preset_names();
  return names.c_str();
}

const char* crowsim_last_error(void) { return g_last_error.c_str(); }

crowsim_status crowsim_config_load(const char* path, crowsim_config** out) {
  if (!path || !out) {
    g_last_error = "crowsim_config_load: null argument";
    return CROWSIM_ERR_CONFIG;
  }
  *out = nullptr;
  return guarded(CROWSIM_ERR_CONFIG, [&] {
    auto cfg = std::make_unique<crowsim_config>();
    cfg->rep = crowsim::load_config_file(path);
    *out = cfg.release();
  });
}

crowsim_status crowsim_config_preset(const char* name, crowsim_config** out) {
  if (!name || !out) {
    g_last_error = "crowsim_config_preset: null argument";
    return CROWSIM_ERR_CONFIG;
  }
  *out = nullptr;
  return guarded(CROWSIM_ERR_CONFIG, [&] {
    auto cfg = std::make_unique<crowsim_config>();
    cfg->rep = crowsim::preset_config(name);
    *out = cfg.release();
  });
}

crowsim_status crowsim_config_set(crowsim_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) {
    g_last_error = "crowsim_config_set: null argument";
    return CROWSIM_ERR_CONFIG;
  }
  return guarded(CROWSIM_ERR_CONFIG, [&] { crowsim::apply_override(cfg->rep, key, value); });
}

void crowsim_config_free(crowsim_config* cfg) { delete cfg; }

crowsim_status crowsim_run(const crowsim_config* cfg, crowsim_result** out) {
  if (!cfg || !out) {
    g_last_error = "crowsim_run: null argument";
    return CROWSIM_ERR_CONFIG;
  }
  *out = nullptr;
  return guarded(CROWSIM_ERR_ENGINE, [&] {
    auto res = std::make_unique<crowsim_result>();
    res->rep = crowsim::run(cfg->rep);
    *out = res.release();
  });
}

const char* crowsim_result_summary(const crowsim_result* res) {
  return res ? res->rep.summary_text.c_str() : "";
}

crowsim_status crowsim_result_write(const crowsim_result* res, const char* path,
                                    const char* format) {
  if (!res) {
    g_last_error = "crowsim_result_write: null result";
    return CROWSIM_ERR_IO;
  }
  return guarded(CROWSIM_ERR_IO, [&] {
    crowsim::write_result(res->rep, path ? path : "", format ? format : "");
  });
}

void crowsim_result_free(crowsim_result* res) { delete res; }
