#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace phasekit::io {

// Tabular result record: named columns over rows of doubles. The CSV and
// JSON writers render every number with 17 significant digits so values
// round-trip bit-faithfully; JSON additionally carries the parsed floats.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

// One output document: ordered metadata plus one or more tables. Metadata
// holds the only run-variant fields (tool version, tolerances, parameters);
// data sections never contain timestamps, so identical invocations are
// byte-identical.
struct Document {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Table> tables;

  void add_meta(const std::string& key, const std::string& value) { meta.emplace_back(key, value); }
  void add_meta(const std::string& key, double value);
};

// shortest-faithful decimal rendering: %.17g
std::string format_double(double v);

void write_csv(const Document& doc, std::ostream& os, bool include_meta = true);
void write_json(const Document& doc, std::ostream& os, bool include_meta = true);

}  // namespace phasekit::io
