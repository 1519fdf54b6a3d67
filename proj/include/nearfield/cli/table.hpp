#pragma once

#include <map>
#include <string>
#include <vector>

namespace nearfield::cli {

enum class Dimension { none, length, time, inverse_length, inverse_time };

struct Column {
  std::string name;
  Dimension dimension = Dimension::none;
};

struct ResultTable {
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
};

// Natural-to-SI factors applied only when a table is written out.
struct UnitScale {
  double length = 1.0;
  double time = 1.0;

  void validate() const;
  // "length=..,time=.."
  static UnitScale parse(const std::string& text);
  double factor(Dimension d) const;
};

struct GridSpec {
  std::string axis;
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  bool log = false;

  void validate() const;
  // "axis:min:max:count[:log]"
  static GridSpec parse(const std::string& text);
  std::vector<double> points() const;
};

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& text);

// 17 significant digits, independent of the C++ and C locales.
std::string format_number(double v);

// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

std::string to_csv(const ResultTable& table, const UnitScale& units);

// {"meta": meta_json, "rows": [{column: value, ...}, ...]}
std::string to_json(const ResultTable& table, const UnitScale& units, const std::string& meta_json);

}  // namespace nearfield::cli
