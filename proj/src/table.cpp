#include "phasekit/table.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace phasekit::io {

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("Table '" + name + "': row has " + std::to_string(row.size()) +
                                " cells, expected " + std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

void Document::add_meta(const std::string& key, double value) { meta.emplace_back(key, format_double(value)); }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const Document& doc, std::ostream& os, bool include_meta) {
  if (include_meta)
    for (const auto& [k, v] : doc.meta) os << "# " << k << " = " << v << "\n";
  for (const auto& table : doc.tables) {
    os << "# table = " << table.name << "\n";
    for (size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
    os << "\n";
    for (const auto& row : table.rows) {
      for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_double(row[c]);
      os << "\n";
    }
  }
}

void write_json(const Document& doc, std::ostream& os, bool include_meta) {
  nlohmann::ordered_json root;
  if (include_meta) {
    nlohmann::ordered_json meta;
    for (const auto& [k, v] : doc.meta) meta[k] = v;
    root["meta"] = std::move(meta);
  }
  root["tables"] = nlohmann::ordered_json::array();
  for (const auto& table : doc.tables) {
    nlohmann::ordered_json t;
    t["name"] = table.name;
    t["columns"] = table.columns;
    auto rows_repr = nlohmann::ordered_json::array();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      auto repr = nlohmann::ordered_json::array();
      auto parsed = nlohmann::ordered_json::array();
      for (const double v : row) {
        repr.push_back(format_double(v));
        parsed.push_back(v);
      }
      rows_repr.push_back(std::move(repr));
      rows.push_back(std::move(parsed));
    }
    t["rows_repr"] = std::move(rows_repr);
    t["rows"] = std::move(rows);
    root["tables"].push_back(std::move(t));
  }
  os << root.dump(2) << "\n";
}

}  // namespace phasekit::io
