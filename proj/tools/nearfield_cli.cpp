#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "nearfield/cli/scan.hpp"
#include "nearfield/cli/verify.hpp"
#include "nearfield/errors.hpp"
#include "nearfield/switching.hpp"

namespace cli = nearfield::cli;

namespace {

enum Exit { ok = 0, verification_failed = 1, validation_error = 2, not_converged = 3 };

std::pair<std::string, double> parse_param(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw nearfield::ValidationError("parameter: expected name=value, got '" + text + "'");
  const std::string name = text.substr(0, eq);
  const std::string value = text.substr(eq + 1);
  double v = 0.0;
  std::istringstream is(value);
  is.imbue(std::locale::classic());
  is >> v;
  if (!is || !is.eof())
    throw nearfield::ValidationError("parameter '" + name + "': '" + value + "' is not a number");
  return {name, v};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nearfield::ValidationError("out: cannot open '" + path + "' for writing");
  out << text;
}

std::string info_text() {
  std::ostringstream os;
  os << "nearfield " << NEARFIELD_VERSION << "\n\n"
     << "units: natural (c = hbar = 1); --unit-scale converts lengths and times on output\n"
     << "step function: theta(0) = 1/2\n\n"
     << "Fourier conventions (f(w) = prefactor * int dt exp(sign i w t) f(t)):\n"
     << "  propagators   sign -1, prefactor 1,       inverse prefactor 1/(2pi)\n"
     << "  switching     sign -1, prefactor 1/(2pi), inverse prefactor 1\n"
     << "  point charge  sign -1, prefactor 1/(2pi), inverse prefactor 1\n"
     << "  momentum      exp(-i k.x), prefactor (2pi)^-3 on kernels\n\n"
     << "switching presets:\n";
  for (const auto& p : nearfield::switching::presets())
    os << "  " << p.name << " = " << p.value_si << " s^-1  (" << p.description << ")\n";
  os << "\nscan targets and quantities:\n";
  for (const auto& t : cli::scan_targets()) {
    os << "  " << t << "\n";
    for (const auto& q : cli::scan_quantities(t)) {
      os << "    " << q.name << "  " << q.description << "  [";
      for (std::size_t i = 0; i < q.defaults.size(); ++i)
        os << (i ? ", " : "") << q.defaults[i].first << "=" << q.defaults[i].second;
      os << "]\n";
    }
  }
  os << "\nverify suites:";
  for (const auto& s : cli::verify_suites()) os << " " << s;
  os << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Near-field electrodynamics toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(NEARFIELD_VERSION));

  cli::ScanRequest req;
  std::vector<std::string> params;
  std::string grid_text, format_text = "csv", units_text;
  unsigned hw = std::thread::hardware_concurrency();
  req.threads = int(hw == 0 ? 1 : std::min(hw, 8u));

  auto* scan = app.add_subcommand("scan", "Evaluate a quantity over a parameter grid");
  scan->add_option("--target", req.target, "propagator, decompose, switching, point-charge, ftir, interactions")
      ->required();
  scan->add_option("--quantity", req.quantity, "quantity within the target (see info)");
  scan->add_option("--param", params, "name=value, repeatable");
  scan->add_option("--grid", grid_text, "axis:min:max:count[:log]")->required();
  scan->add_option("--out", req.out, "output file, stdout when omitted");
  scan->add_option("--format", format_text, "csv or json");
  scan->add_option("--unit-scale", units_text, "length=..,time=..");
  scan->add_option("--threads", req.threads, "worker threads");

  std::string suite = "all";
  std::string report_path;
  bool json_report = false;
  auto* verify = app.add_subcommand("verify", "Run the identity and acceptance checks");
  verify->add_option("--suite", suite, "all or a module name");
  verify->add_flag("--json", json_report, "print the JSON report instead of the summary");
  verify->add_option("--report", report_path, "also write the JSON report to this file");

  auto* info = app.add_subcommand("info", "Print conventions, presets and scan quantities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : validation_error;
  }

  try {
    if (*scan) {
      for (const auto& p : params) {
        auto [name, value] = parse_param(p);
        req.parameters[name] = value;
      }
      req.grid = cli::GridSpec::parse(grid_text);
      req.format = cli::parse_format(format_text);
      if (!units_text.empty()) req.units = cli::UnitScale::parse(units_text);
      if (req.threads < 1) throw nearfield::ValidationError("threads: must be >= 1");
      write_output(cli::render(cli::run_scan(req), req), req.out);
      return ok;
    }
    if (*verify) {
      const auto report = cli::run_verify(suite);
      std::cout << (json_report ? report.json() + "\n" : report.summary());
      if (!report_path.empty()) write_output(report.json() + "\n", report_path);
      return report.passed() ? ok : verification_failed;
    }
    if (*info) {
      std::cout << info_text();
      return ok;
    }
  } catch (const nearfield::ConvergenceError& e) {
    std::cerr << "error (non-convergence): " << e.what() << "\n";
    return not_converged;
  } catch (const nearfield::OverflowError& e) {
    std::cerr << "error (overflow): " << e.what() << "\n";
    return not_converged;
  } catch (const nearfield::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return validation_error;
  }
  return ok;
}
