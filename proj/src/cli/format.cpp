#include <charconv>
#include <cstdio>
#include <cmath>
#include <sstream>

#include "nearfield/cli/table.hpp"
#include "nearfield/errors.hpp"

namespace nearfield::cli {

namespace {

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || s.empty())
    throw ValidationError(what + ": cannot parse number '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void UnitScale::validate() const {
  if (!(length > 0) || !std::isfinite(length)) throw ValidationError("unit-scale: length must be > 0");
  if (!(time > 0) || !std::isfinite(time)) throw ValidationError("unit-scale: time must be > 0");
}

UnitScale UnitScale::parse(const std::string& text) {
  UnitScale u;
  if (text.empty()) return u;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("unit-scale: expected name=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const double v = parse_double(item.substr(eq + 1), "unit-scale " + key);
    if (key == "length") u.length = v;
    else if (key == "time") u.time = v;
    else throw ValidationError("unit-scale: unknown key '" + key + "'");
  }
  u.validate();
  return u;
}

double UnitScale::factor(Dimension d) const {
  switch (d) {
    case Dimension::none: return 1.0;
    case Dimension::length: return length;
    case Dimension::time: return time;
    case Dimension::inverse_length: return 1.0 / length;
    case Dimension::inverse_time: return 1.0 / time;
  }
  return 1.0;
}

void GridSpec::validate() const {
  if (axis.empty()) throw ValidationError("grid: axis name is empty");
  if (count < 2) throw ValidationError("grid: count must be >= 2");
  if (!std::isfinite(min) || !std::isfinite(max)) throw ValidationError("grid: bounds must be finite");
  if (!(min < max)) throw ValidationError("grid: min must be < max");
  if (log && !(min > 0)) throw ValidationError("grid: log spacing requires min > 0");
}

GridSpec GridSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4 && parts.size() != 5)
    throw ValidationError("grid: expected axis:min:max:count[:log], got '" + text + "'");
  GridSpec g;
  g.axis = parts[0];
  g.min = parse_double(parts[1], "grid min");
  g.max = parse_double(parts[2], "grid max");
  const double c = parse_double(parts[3], "grid count");
  if (c != std::floor(c) || c > 1e7) throw ValidationError("grid: count must be an integer");
  g.count = int(c);
  if (parts.size() == 5) {
    if (parts[4] == "log") g.log = true;
    else if (parts[4] == "lin" || parts[4] == "linear") g.log = false;
    else throw ValidationError("grid: spacing must be 'log' or 'linear'");
  }
  g.validate();
  return g;
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> p(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = count > 1 ? double(i) / double(count - 1) : 0.0;
    if (log) {
      p[std::size_t(i)] = std::exp(std::log(min) + f * (std::log(max) - std::log(min)));
    } else {
      p[std::size_t(i)] = min + f * (max - min);
    }
  }
  // exact endpoints
  p.front() = min;
  p.back() = max;
  return p;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw ValidationError("format: expected csv or json, got '" + text + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc()) throw Error("format_number: conversion failed");
  return std::string(buf, ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

std::string to_csv(const ResultTable& table, const UnitScale& units) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ",";
    out += csv_field(table.columns[i].name);
  }
  out += "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += csv_field(format_number(row[i] * units.factor(table.columns[i].dimension)));
    }
    out += "\r\n";
  }
  return out;
}

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out + "\"";
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return format_number(v);
}

}  // namespace

std::string to_json(const ResultTable& table, const UnitScale& units, const std::string& meta_json) {
  std::string meta;
  for (char c : meta_json) {
    meta += c;
    if (c == '\n') meta += "  ";
  }
  std::string out = "{\n  \"meta\": " + meta + ",\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += r ? ",\n    {" : "\n    {";
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ", ";
      out += json_string(table.columns[i].name) + ": " +
             json_number(row[i] * units.factor(table.columns[i].dimension));
    }
    out += "}";
  }
  out += table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace nearfield::cli
