#include "morseband/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "morseband/errors.hpp"

namespace morseband {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
  }
  return out;
}

}  // namespace

std::map<std::string, double> default_tolerances() {
  return {
      {"orthonormality", 1e-8},  {"ode", 1e-10},          {"hamiltonian", 1e-6},
      {"ladder", 1e-6},          {"casimir", 1e-6},       {"commutator", 1e-5},
      {"landau_limit", 1e-12},   {"delta_lowest", 1e-10}, {"moments", 1e-7},
      {"landau_delta", 1e-7},    {"coherent_closed", 1e-7}, {"coherent_eigen", 1e-5},
      {"coherent_norm", 1e-7},   {"radial_moment", 1e-8}, {"identity", 1e-6},
      {"wronskian", 1e-10},      {"recurrence", 1e-11},   {"generating", 1e-9},
      {"eq22", 1e-10},           {"rodrigues", 1e-10},    {"density_y", 1e-10},
  };
}

RunConfig::RunConfig() : tolerances(default_tolerances()) {}

GridSpec RunConfig::grid() const { return band_grid(params, nx, ny, u_lo, u_hi); }

double RunConfig::tol(const std::string& name) const {
  auto it = tolerances.find(name);
  if (it == tolerances.end()) throw ConfigError("unknown tolerance '" + name + "'");
  return it->second;
}

void RunConfig::validate() const {
  try {
    params.validate();
    grid();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  for (const auto& [name, v] : tolerances) {
    if (!(v > 0.0)) throw ConfigError("config: tolerance '" + name + "' must be > 0");
  }
  if (!output_format.empty() && output_format != "csv" && output_format != "json") {
    throw ConfigError("config: format must be csv or json");
  }
}

void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "units") {
    if (value == "natural") {
      cfg.params = PhysParams::natural();
    } else if (value == "cgs") {
      cfg.params = PhysParams::cgs();
    } else {
      throw ConfigError("config: units must be natural or cgs");
    }
  } else if (key == "B0") {
    cfg.params.B0 = to_double(key, value);
  } else if (key == "a0") {
    cfg.params.a0 = to_double(key, value);
  } else if (key == "mu") {
    cfg.params.mu = to_double(key, value);
  } else if (key == "hbar") {
    cfg.params.hbar = to_double(key, value);
  } else if (key == "c") {
    cfg.params.c = to_double(key, value);
  } else if (key == "e") {
    cfg.params.e = to_double(key, value);
  } else if (key == "nx") {
    cfg.nx = to_int(key, value);
  } else if (key == "ny") {
    cfg.ny = to_int(key, value);
  } else if (key == "u_lo") {
    cfg.u_lo = to_double(key, value);
  } else if (key == "u_hi") {
    cfg.u_hi = to_double(key, value);
  } else if (key == "format") {
    cfg.output_format = value;
  } else if (key == "out") {
    cfg.output_path = value;
  } else if (key.rfind("tol.", 0) == 0) {
    const std::string name = key.substr(4);
    if (!cfg.tolerances.count(name)) throw ConfigError("config: unknown tolerance '" + name + "'");
    cfg.tolerances[name] = to_double(key, value);
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

RunConfig parse_key_value(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  // units first, so that B0=... after units=cgs is not overwritten
  std::vector<std::pair<std::string, std::string>> kv;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  for (const auto& [k, v] : kv) {
    if (k == "units") set_config_key(cfg, k, v);
  }
  for (const auto& [k, v] : kv) {
    if (k != "units") set_config_key(cfg, k, v);
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: JSON root must be an object");
  RunConfig cfg;
  auto as_text = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
      return std::string(buf);
    }
    throw ConfigError("config: values must be strings or numbers");
  };
  if (j.contains("units")) set_config_key(cfg, "units", as_text(j["units"]));
  for (const auto& [k, v] : j.items()) {
    if (k == "units") continue;
    if (k == "tol" && v.is_object()) {
      for (const auto& [name, tv] : v.items()) set_config_key(cfg, "tol." + name, as_text(tv));
      continue;
    }
    set_config_key(cfg, k, as_text(v));
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const std::string head = trim(text);
  return (!head.empty() && head.front() == '{') ? parse_json(text) : parse_key_value(text);
}

void apply_tolerance_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("--tol expects NAME=VALUE");
  const std::string name = trim(assignment.substr(0, eq));
  set_config_key(cfg, "tol." + name, trim(assignment.substr(eq + 1)));
  if (!(cfg.tolerances[name] > 0.0)) throw ConfigError("--tol: value must be > 0");
}

}  // namespace morseband
