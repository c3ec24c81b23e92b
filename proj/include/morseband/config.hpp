#pragma once

#include <map>
#include <string>

#include "morseband/grid.hpp"
#include "morseband/model.hpp"

namespace morseband {

// Run configuration. Files are flat key=value text (# comments) or a JSON
// object with the same keys. Keys:
//   units = natural | cgs      (cgs switches mu, hbar, c, e to electron values
//                               and B0, a0 to 1e4 G, 1e-5 cm before the other keys apply)
//   B0, a0, mu, hbar, c, e
//   nx, ny, u_lo, u_hi         verification grid (band_grid)
//   format = csv | json, out = PATH
//   tol.NAME = VALUE           see default_tolerances()
struct RunConfig {
  PhysParams params = PhysParams::natural();
  int nx = 8192;
  int ny = 64;
  double u_lo = 1e-14;
  double u_hi = 250.0;
  std::map<std::string, double> tolerances;
  std::string output_format;  // empty: the command's default
  std::string output_path;    // empty: stdout

  RunConfig();
  GridSpec grid() const;
  double tol(const std::string& name) const;
  void validate() const;
};

std::map<std::string, double> default_tolerances();

// Throws ConfigError on unknown keys or malformed values.
void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value);
RunConfig parse_key_value(const std::string& text);
RunConfig parse_json(const std::string& text);
// JSON if the first non-blank character is '{', key=value otherwise.
RunConfig load_config(const std::string& path);
// "NAME=VALUE"
void apply_tolerance_override(RunConfig& cfg, const std::string& assignment);

}  // namespace morseband
