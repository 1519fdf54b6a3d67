#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nearfield/cli/scan.hpp"
#include "nearfield/cli/verify.hpp"
#include "nearfield/errors.hpp"
#include "nearfield/interactions.hpp"
#include "nearfield/point_charge.hpp"
#include "nearfield/propagators.hpp"
#include "nearfield/switching.hpp"

namespace py = pybind11;
namespace nf = nearfield;

namespace {

nf::cli::ScanRequest make_request(const std::string& target, const std::string& grid,
                                  const std::string& quantity, const std::map<std::string, double>& params,
                                  const std::string& unit_scale, const std::string& format, int threads) {
  nf::cli::ScanRequest req;
  req.target = target;
  req.quantity = quantity;
  req.parameters = params;
  req.grid = nf::cli::GridSpec::parse(grid);
  if (!unit_scale.empty()) req.units = nf::cli::UnitScale::parse(unit_scale);
  req.format = nf::cli::parse_format(format);
  req.threads = threads;
  return req;
}

nf::switching::TemporalForm temporal_form(const std::string& name) {
  using F = nf::switching::TemporalForm;
  if (name == "g1") return F::g1;
  if (name == "g2") return F::g2;
  if (name == "g3") return F::g3;
  if (name == "two_level") return F::g1_two_level;
  throw nf::ValidationError("unknown switching form '" + name + "'");
}

nf::propagators::MixedKind mixed_kind(const std::string& name) {
  using K = nf::propagators::MixedKind;
  static const std::map<std::string, K> kinds = {
      {"D", K::D},       {"D1", K::D1},     {"D_plus", K::D_plus},     {"D_minus", K::D_minus},
      {"D_N", K::D_N},   {"D_N1", K::D_N1}, {"D_N_plus", K::D_N_plus}, {"D_N_minus", K::D_N_minus}};
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw nf::ValidationError("unknown propagator '" + name + "'");
  return it->second;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = NEARFIELD_VERSION;

  auto base = py::register_exception<nf::Error>(m, "NearfieldError", PyExc_RuntimeError);
  py::register_exception<nf::ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<nf::OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<nf::ValidationError>(m, "ValidationError", PyExc_ValueError);
  // PoleError and ConeSingularityError derive from DomainError in C++, so they land here too
  py::register_exception<nf::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "scan",
      [](const std::string& target, const std::string& grid, const std::string& quantity,
         const std::map<std::string, double>& params, const std::string& unit_scale, int threads) {
        const auto req = make_request(target, grid, quantity, params, unit_scale, "csv", threads);
        const auto table = nf::cli::run_scan(req);
        py::dict out;
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
          const double f = req.units.factor(table.columns[c].dimension);
          py::list col;
          for (const auto& row : table.rows) col.append(row[c] * f);
          out[py::str(table.columns[c].name)] = col;
        }
        return out;
      },
      py::arg("target"), py::arg("grid"), py::arg("quantity") = "", py::arg("params") = std::map<std::string, double>{},
      py::arg("unit_scale") = "", py::arg("threads") = 1,
      "Evaluate a quantity over a grid; returns {column: [values]}.");

  m.def(
      "render",
      [](const std::string& target, const std::string& grid, const std::string& quantity,
         const std::map<std::string, double>& params, const std::string& unit_scale, const std::string& format,
         int threads) {
        const auto req = make_request(target, grid, quantity, params, unit_scale, format, threads);
        return nf::cli::render(nf::cli::run_scan(req), req);
      },
      py::arg("target"), py::arg("grid"), py::arg("quantity") = "", py::arg("params") = std::map<std::string, double>{},
      py::arg("unit_scale") = "", py::arg("format") = "csv", py::arg("threads") = 1,
      "Same as scan but returns the CSV or JSON text the command-line tool writes.");

  m.def("targets", &nf::cli::scan_targets);
  m.def("quantities", [](const std::string& target) {
    std::vector<std::string> names;
    for (const auto& q : nf::cli::scan_quantities(target)) names.push_back(q.name);
    return names;
  });

  m.def(
      "verify",
      [](const std::string& suite) {
        const auto report = nf::cli::run_verify(suite);
        py::list rows;
        for (const auto& c : report.criteria) {
          py::dict d;
          d["id"] = c.id;
          d["name"] = c.name;
          d["suite"] = c.suite;
          d["measured"] = c.measured;
          d["tolerance"] = c.tolerance;
          d["passed"] = c.passed;
          d["runtime_s"] = c.runtime_s;
          d["detail"] = c.detail;
          rows.append(d);
        }
        return rows;
      },
      py::arg("suite") = "all");

  m.def("schwinger_dn", [](double t, double r) { return nf::propagators::schwinger_dn(t, r); }, py::arg("t"),
        py::arg("r"));
  m.def(
      "propagator_mixed",
      [](const std::string& kind, double omega, double r) {
        return nf::propagators::singular_mixed(mixed_kind(kind), {omega, r});
      },
      py::arg("kind"), py::arg("omega"), py::arg("r"));
  m.def("superluminal_fraction", &nf::propagators::superluminal_fraction, py::arg("r"), py::arg("T"));

  m.def(
      "switching_time",
      [](const std::string& form, double t, double gamma, double omega0) {
        return nf::switching::fis_time({temporal_form(form), gamma, omega0}, t);
      },
      py::arg("form"), py::arg("t"), py::arg("gamma") = 1.0, py::arg("omega0") = 0.0);
  m.def(
      "switching_freq",
      [](const std::string& form, double omega, double gamma, double omega0) {
        return nf::switching::fis_freq({temporal_form(form), gamma, omega0}, omega);
      },
      py::arg("form"), py::arg("omega"), py::arg("gamma") = 1.0, py::arg("omega0") = 0.0);

  m.def(
      "charge_field_mixed",
      [](double omega, double r, double Q, double gamma) {
        return nf::point_charge::field_mixed({Q, gamma}, omega, r);
      },
      py::arg("omega"), py::arg("r"), py::arg("Q") = 1.0, py::arg("gamma") = 1.0);
  m.def(
      "charge_field_time",
      [](double t, double r, double Q, double gamma) { return nf::point_charge::field_time({Q, gamma}, t, r); },
      py::arg("t"), py::arg("r"), py::arg("Q") = 1.0, py::arg("gamma") = 1.0);
  m.def(
      "self_energy",
      [](double Q, double gamma, bool numeric) {
        using M = nf::point_charge::SelfEnergyMethod;
        return nf::point_charge::self_energy({Q, gamma}, numeric ? M::full_numeric : M::asymptotic_piecewise)
            .value;
      },
      py::arg("Q") = 1.0, py::arg("gamma") = 1.0, py::arg("numeric") = false);

  m.def(
      "nonresonant_potential",
      [](double R, double omega0, double linewidth, double dipole) {
        const nf::interactions::AtomModel a{omega0, linewidth, dipole};
        return nf::interactions::nonresonant_potential(a, a, R).value;
      },
      py::arg("R"), py::arg("omega0") = 1.0, py::arg("linewidth") = 0.01, py::arg("dipole") = 1.0);
}
