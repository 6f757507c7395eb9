#pragma once

// Plain tables for CSV / JSON output. Numbers are written in the shortest
// decimal form that round-trips to the same double.

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "anisowave/cli/config.hpp"

namespace anisowave::cli {

std::string format_number(double v);

using Cell = std::variant<double, long long, std::string, bool>;

struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(std::string key, std::string value) { metadata.emplace_back(std::move(key), std::move(value)); }
};

/// "# key: value" lines, the column header, then one line per row.
void write_csv(std::ostream& os, const Table& t);
/// {"metadata": {...}, "columns": [...], "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& os, const Table& t);
void write_table(std::ostream& os, const Table& t, Format f);

}  // namespace anisowave::cli
