#pragma once

// Tabular output shared by the CLI commands. Floats are always written as
// %.16e (17 significant digits) and nothing time-dependent is emitted, so
// identical inputs give byte-identical files.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "morseband/model.hpp"

namespace morseband::report {

const char* version();

std::string format_double(double v);

using Cell = std::variant<long long, double, std::string, bool>;

struct Table {
  std::string title;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
};

// '# key: value' header lines, then a CSV header and rows.
void write_csv(std::ostream& os, const Table& t);
// {"title", "version", "meta", "columns", "rows"}
void write_json(std::ostream& os, const Table& t);
void write(std::ostream& os, const Table& t, const std::string& format);

void add_params_meta(Table& t, const PhysParams& p);

}  // namespace morseband::report
