#include "infogeo/cli/table.hpp"

#include <cmath>
#include <cstdlib>
#include <fmt/format.h>
#include "json.hpp"

namespace infogeo::cli {
namespace {

std::string format_cell(const Cell& cell, int precision) {
  return std::visit(
      [precision](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v, precision);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "1" : "0";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return fmt::format("{}", v);
        } else {
          return v;
        }
      },
      cell);
}

nlohmann::ordered_json json_cell(const Cell& cell, int precision) {
  return std::visit(
      [precision](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          // Round through the text form so JSON and CSV carry the same digits.
          return std::strtod(format_double(v, precision).c_str(), nullptr);
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

std::string format_double(double value, int precision) {
  if (value == 0.0) return "0";  // folds -0
  return fmt::format("{:.{}g}", value, precision);
}

void write_csv(std::ostream& out, const Table& table, int precision) {
  for (const auto& [key, value] : table.meta) {
    out << "# " << key << '=' << format_cell(value, precision) << '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_cell(row[i], precision);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table, int precision) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.meta) doc["meta"][key] = json_cell(value, precision);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i], precision);
    doc["rows"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& table, OutputFormat format, int precision) {
  if (format == OutputFormat::Json) {
    write_json(out, table, precision);
  } else {
    write_csv(out, table, precision);
  }
}

}  // namespace infogeo::cli
