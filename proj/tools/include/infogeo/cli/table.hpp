#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infogeo/cli/config.hpp"

namespace infogeo::cli {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

/// Ordered metadata plus a fixed-column table.
struct Table {
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(std::string key, Cell value) {
    meta.emplace_back(std::move(key), std::move(value));
  }
};

/// "%.{precision}g" without locale; inf and nan spelled out.
std::string format_double(double value, int precision);

/// "# key=value" lines, a header row, then comma-separated rows.
void write_csv(std::ostream& out, const Table& table, int precision);

/// {"meta": {...}, "rows": [{column: value, ...}, ...]} with doubles rounded
/// to the configured significant digits.
void write_json(std::ostream& out, const Table& table, int precision);

void write_table(std::ostream& out, const Table& table, OutputFormat format, int precision);

}  // namespace infogeo::cli
