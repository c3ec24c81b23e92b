#include "morseband/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "morseband/errors.hpp"

#ifndef MORSEBAND_VERSION
#define MORSEBAND_VERSION "v0.1.0"
#endif

namespace morseband::report {

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c, bool json) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          if (json && !std::isfinite(v)) return "null";
          return format_double(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return json ? quote(v) : csv_field(v);
        }
      },
      c);
}

}  // namespace

const char* version() { return MORSEBAND_VERSION; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw DomainError("Table::add_row: " + std::to_string(row.size()) + " cells for " +
                      std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& os, const Table& t) {
  os << "# " << t.title << "\n# version: " << version() << "\n";
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i], false);
    os << "\n";
  }
}

void write_json(std::ostream& os, const Table& t) {
  os << "{\n  \"title\": " << quote(t.title) << ",\n  \"version\": " << quote(version())
     << ",\n  \"meta\": {";
  for (std::size_t i = 0; i < t.meta.size(); ++i) {
    os << (i ? ", " : "") << quote(t.meta[i].first) << ": " << quote(t.meta[i].second);
  }
  os << "},\n  \"columns\": [";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? ", " : "") << quote(t.columns[i]);
  os << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) os << (i ? ", " : "") << cell_text(t.rows[r][i], true);
    os << "]";
  }
  os << (t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write(std::ostream& os, const Table& t, const std::string& format) {
  if (format == "json") {
    write_json(os, t);
  } else {
    write_csv(os, t);
  }
}

void add_params_meta(Table& t, const PhysParams& p) {
  t.add_meta("B0", format_double(p.B0));
  t.add_meta("a0", format_double(p.a0));
  t.add_meta("mu", format_double(p.mu));
  t.add_meta("hbar", format_double(p.hbar));
  t.add_meta("c", format_double(p.c));
  t.add_meta("e", format_double(p.e));
  t.add_meta("beta", format_double(p.beta()));
}

}  // namespace morseband::report
