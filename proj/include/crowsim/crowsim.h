/* crowsim — squeezed-state evolution in lossy coupled-cavity chains.
 *
 * C interface to the simulation core. All entry points return a
 * crowsim_status; on failure crowsim_last_error() carries a human-readable
 * message for the calling thread. Handles are opaque and must be released
 * with the matching *_free call.
 */
#ifndef CROWSIM_H
#define CROWSIM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crowsim_status {
  CROWSIM_OK = 0,
  CROWSIM_ERR_CONFIG = 1, /* bad configuration, preset name, key or value */
  CROWSIM_ERR_ENGINE = 2, /* numerical engine rejected or failed the run */
  CROWSIM_ERR_IO = 3      /* file could not be read or written */
} crowsim_status;

typedef struct crowsim_config crowsim_config;
typedef struct crowsim_result crowsim_result;

const char* crowsim_version(void);

/* Comma-separated list of built-in preset names. */
const char* crowsim_preset_names(void);

/* Message for the most recent failure on this thread; empty if none. */
const char* crowsim_last_error(void);

/* Build a config from an INI-style file or from a named preset. */
crowsim_status crowsim_config_load(const char* path, crowsim_config** out);
crowsim_status crowsim_config_preset(const char* name, crowsim_config** out);

/* Override one entry, e.g. ("report.mode", "instantaneous"). The value is
 * validated against the full config immediately. */
crowsim_status crowsim_config_set(crowsim_config* cfg, const char* key, const char* value);

void crowsim_config_free(crowsim_config* cfg);

/* Run the experiment described by the config. */
crowsim_status crowsim_run(const crowsim_config* cfg, crowsim_result** out);

/* Human-readable run summary (per-cavity and per-pair extrema). The string
 * is owned by the result handle. */
const char* crowsim_result_summary(const crowsim_result* res);

/* Serialize the result. path NULL/"" uses output.path from the config;
 * format NULL/"" uses output.format, otherwise "csv" or "json". */
crowsim_status crowsim_result_write(const crowsim_result* res, const char* path,
                                    const char* format);

void crowsim_result_free(crowsim_result* res);

#ifdef __cplusplus
}
#endif

#endif /* CROWSIM_H */
