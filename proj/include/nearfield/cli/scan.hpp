#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nearfield/cli/table.hpp"

namespace nearfield::cli {

struct ScanRequest {
  std::string target;
  std::string quantity;  // empty selects the target's default
  std::map<std::string, double> parameters;
  GridSpec grid;
  UnitScale units;
  OutputFormat format = OutputFormat::csv;
  std::string out;
  int threads = 1;
};

using Params = std::map<std::string, double>;

struct Quantity {
  std::string name;
  std::string description;
  std::vector<std::pair<std::string, double>> defaults;
  std::vector<Column> outputs;
  std::function<std::vector<double>(const Params&)> eval;
};

const std::vector<std::string>& scan_targets();
const std::vector<Quantity>& scan_quantities(const std::string& target);
const Quantity& find_quantity(const std::string& target, const std::string& name);

Dimension parameter_dimension(const std::string& name);

// Rows follow grid order regardless of the thread count.
ResultTable run_scan(const ScanRequest& req);

std::string request_meta_json(const ScanRequest& req);
std::string render(const ResultTable& table, const ScanRequest& req);

}  // namespace nearfield::cli
