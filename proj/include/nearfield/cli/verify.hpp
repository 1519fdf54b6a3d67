#pragma once

#include <string>
#include <vector>

namespace nearfield::cli {

struct Criterion {
  std::string id;
  std::string name;
  std::string suite;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool gated = true;
  double runtime_s = 0.0;
  double budget_s = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<Criterion> criteria;

  bool passed() const;
  std::string json() const;
  std::string summary() const;
};

const std::vector<std::string>& verify_suites();

// suite is "all" or a module name; anything else is a ValidationError.
VerifyReport run_verify(const std::string& suite);

}  // namespace nearfield::cli
