#ifndef CROWSIM_SERIALIZE_HPP
#define CROWSIM_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "run.hpp"

namespace crowsim {

// CSV layout: t_raw, t_scaled, then per cavity n_p, var_x_p, var_y_p,
// sd_x_p, sd_y_p, then per pair corrvar_{p,p'}, entangled_{p,p'} (0/1).
// Floats carry 17 significant digits, so a re-read is bit-exact. A file
// with no cavities and no pairs is written header-only.
void write_csv(const RunResult& result, std::ostream& out);

// JSON mirror of the CSV plus a metadata header (config echo, version,
// units, summary). The timestamp is omitted when with_timestamp is false,
// making identical runs byte-identical.
void write_json(const RunResult& result, std::ostream& out, bool with_timestamp);

// Write to result.config.out_path (or an explicit path) in the configured
// format. Throws IoError when the file cannot be written.
void write_result(const RunResult& result, const std::string& path_override = "",
                  const std::string& format_override = "");

}  // namespace crowsim

#endif
