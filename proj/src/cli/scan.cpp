#include "nearfield/cli/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <json.hpp>
#include <thread>

#include "nearfield/engine.hpp"
#include "nearfield/errors.hpp"
#include "nearfield/ftir.hpp"
#include "nearfield/interactions.hpp"
#include "nearfield/point_charge.hpp"
#include "nearfield/propagators.hpp"
#include "nearfield/switching.hpp"
#include "nearfield/tensor.hpp"

namespace nearfield::cli {

namespace {

using propagators::MixedKind;
using propagators::Region;
using propagators::TimeKind;

std::vector<Column> cplx(const std::string& name, Dimension d = Dimension::none) {
  return {{name + "_re", d}, {name + "_im", d}};
}

std::vector<double> split(complex v) { return {v.real(), v.imag()}; }

std::vector<Column> concat(std::vector<std::vector<Column>> parts) {
  std::vector<Column> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

propagators::SignConvention sign_of(const Params& p) {
  return p.at("printed_sign") != 0.0 ? propagators::SignConvention::piecewise_printed
                                     : propagators::SignConvention::canonical;
}

Eigen::Vector3d direction(const Params& p) {
  Eigen::Vector3d e(p.at("ex"), p.at("ey"), p.at("ez"));
  const double n = e.norm();
  if (!(n > 0)) throw ValidationError("parameter 'ex,ey,ez': direction must be nonzero");
  return e / n;
}

std::vector<Column> tensor_columns() {
  std::vector<Column> cols;
  const char* axes = "xyz";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto c = cplx(std::string("D_") + axes[i] + axes[j]);
      cols.insert(cols.end(), c.begin(), c.end());
    }
  cols.push_back({"delta_residue", Dimension::none});
  cols.push_back({"on_support", Dimension::none});
  return cols;
}

std::vector<double> tensor_row(const propagators::TensorBlock& b) {
  std::vector<double> row;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      row.push_back(b.values(i, j).real());
      row.push_back(b.values(i, j).imag());
    }
  row.push_back(b.delta ? b.delta->residue : 0.0);
  row.push_back(b.delta && b.delta->on_support ? 1.0 : 0.0);
  return row;
}

std::vector<Quantity> propagator_quantities() {
  std::vector<Quantity> q;
  const std::vector<std::pair<std::string, TimeKind>> time_kinds = {
      {"D_N", TimeKind::D_N}, {"D_N1", TimeKind::D_N1},
      {"D_N_plus", TimeKind::D_N_plus}, {"D_N_minus", TimeKind::D_N_minus}};
  for (const auto& [name, kind] : time_kinds) {
    q.push_back({name, "time-domain " + name + "(t, r)",
                 {{"t", 0.0}, {"r", 1.0}, {"mu", 1.0}, {"printed_sign", 0.0}},
                 cplx("value"),
                 [kind = kind](const Params& p) {
                   return split(propagators::singular_time(kind, {p.at("t"), p.at("r")},
                                                           {p.at("mu")}, sign_of(p)));
                 }});
  }
  const std::vector<std::pair<std::string, MixedKind>> mixed_kinds = {
      {"D", MixedKind::D}, {"D1", MixedKind::D1}, {"D_plus", MixedKind::D_plus},
      {"D_minus", MixedKind::D_minus}, {"D_N", MixedKind::D_N}, {"D_N1", MixedKind::D_N1},
      {"D_N_plus", MixedKind::D_N_plus}, {"D_N_minus", MixedKind::D_N_minus}};
  for (const auto& [name, kind] : mixed_kinds) {
    q.push_back({"mixed_" + name, name + "(omega, r)", {{"omega", 1.0}, {"r", 1.0}}, cplx("value"),
                 [kind = kind](const Params& p) {
                   return split(propagators::singular_mixed(kind, {p.at("omega"), p.at("r")}));
                 }});
  }
  q.push_back({"momentum_nf", "near-field scalar in (omega, k)", {{"omega", 1.0}, {"k", 2.0}},
               cplx("value"), [](const Params& p) {
                 return split(propagators::singular_momentum_nf({p.at("omega"), p.at("k")}));
               }});
  q.push_back({"nf_squared", "|D_NF|^2 time profile", {{"t", 0.0}, {"r", 1.0}}, {{"value"}},
               [](const Params& p) {
                 return std::vector<double>{propagators::nf_squared({p.at("t"), p.at("r")})};
               }});
  q.push_back({"superluminal_fraction", "share of |t| < r in int_{-T}^{T} |D_NF|^2",
               {{"r", 1.0}, {"T", 2.0}}, {{"value"}}, [](const Params& p) {
                 return std::vector<double>{propagators::superluminal_fraction(p.at("r"), p.at("T"))};
               }});
  return q;
}

std::vector<Quantity> decompose_quantities() {
  std::vector<Quantity> q;
  const std::vector<std::pair<std::string, Region>> regions = {
      {"FF", Region::FF}, {"IF", Region::IF}, {"NF", Region::NF}};
  const std::vector<std::pair<std::string, double>> dir = {{"ex", 0.0}, {"ey", 0.0}, {"ez", 1.0}};
  auto with_dir = [&](std::vector<std::pair<std::string, double>> d) {
    d.insert(d.end(), dir.begin(), dir.end());
    return d;
  };
  for (const auto& [name, region] : regions) {
    q.push_back({name + "_time", name + " block at (t, r)",
                 with_dir({{"t", 0.5}, {"r", 1.0}, {"printed_sign", 0.0}}), tensor_columns(),
                 [region = region](const Params& p) {
                   return tensor_row(propagators::tensor_decompose(
                       region, propagators::SpacetimePoint{p.at("t"), p.at("r")}, direction(p),
                       sign_of(p)));
                 }});
    q.push_back({name + "_mixed", name + " block at (omega, r)",
                 with_dir({{"omega", 1.0}, {"r", 1.0}}), tensor_columns(),
                 [region = region](const Params& p) {
                   return tensor_row(propagators::tensor_decompose(
                       region, propagators::MixedPoint{p.at("omega"), p.at("r")}, direction(p)));
                 }});
    q.push_back({name + "_momentum", name + " block at (omega, k)",
                 with_dir({{"omega", 1.0}, {"k", 2.0}}), tensor_columns(),
                 [region = region](const Params& p) {
                   return tensor_row(propagators::tensor_momentum(
                       region, propagators::SpectralPoint{p.at("omega"), p.at("k")}, direction(p)));
                 }});
  }
  return q;
}

switching::SwitchingSpec temporal(const Params& p, switching::TemporalForm form) {
  return {form, p.at("gamma"), p.at("omega0")};
}

std::vector<Quantity> switching_quantities() {
  using switching::TemporalForm;
  std::vector<Quantity> q;
  const std::vector<std::pair<std::string, TemporalForm>> forms = {
      {"g1", TemporalForm::g1}, {"g2", TemporalForm::g2}, {"g3", TemporalForm::g3},
      {"two_level", TemporalForm::g1_two_level}};
  for (const auto& [name, form] : forms) {
    q.push_back({name + "_time", name + " switching function g(t)",
                 {{"t", 0.0}, {"gamma", 1.0}, {"omega0", 0.0}}, {{"value"}},
                 [form = form](const Params& p) {
                   return std::vector<double>{switching::fis_time(temporal(p, form), p.at("t"))};
                 }});
    q.push_back({name + "_freq", name + " switching function g(omega)",
                 {{"omega", 0.0}, {"gamma", 1.0}, {"omega0", 0.0}}, {{"value", Dimension::time}},
                 [form = form](const Params& p) {
                   return std::vector<double>{switching::fis_freq(temporal(p, form), p.at("omega"))};
                 }});
  }
  for (const auto& [name, form] : std::vector<std::pair<std::string, switching::SpatialForm>>{
           {"g1_spatial", switching::SpatialForm::g1}, {"g2_spatial", switching::SpatialForm::g2}}) {
    q.push_back({name, "spatial switching g(z)", {{"z", 0.0}, {"kappa", 1.0}}, {{"value"}},
                 [form = form](const Params& p) {
                   return std::vector<double>{switching::fis_spatial({form, p.at("kappa")}, p.at("z"))};
                 }});
  }
  for (const auto& [name, form] : std::vector<std::pair<std::string, switching::SpatialForm>>{
           {"ftir_g1", switching::SpatialForm::g1}, {"ftir_g2", switching::SpatialForm::g2}}) {
    q.push_back({name, "FTIR layer switching g(z)",
                 {{"z", 0.0}, {"omega", 1.0}, {"n", 1.5}, {"phi", pi / 3}}, {{"value"}},
                 [form = form](const Params& p) {
                   return std::vector<double>{
                       switching::fis_ftir(p.at("z"), p.at("omega"), p.at("n"), p.at("phi"), form)};
                 }});
  }
  q.push_back({"momentum_alteration", "|dk_z| and layer width at an interface",
               {{"phi", pi / 3}, {"n1", 1.5}, {"n2", 1.0}, {"omega", 1.0}},
               {{"delta_kz", Dimension::inverse_length},
                {"delta_z", Dimension::length},
                {"reflection", Dimension::none}},
               [](const Params& p) {
                 const auto m = switching::momentum_alteration(p.at("n1"), p.at("n2"), p.at("omega"),
                                                               p.at("phi"));
                 return std::vector<double>{
                     m.delta_kz, m.delta_z,
                     m.regime == switching::AlterationRegime::reflection ? 1.0 : 0.0};
               }});
  return q;
}

point_charge::ChargeConfig charge(const Params& p) { return {p.at("Q"), p.at("gamma")}; }

std::vector<Quantity> point_charge_quantities() {
  namespace pc = point_charge;
  std::vector<Quantity> q;
  q.push_back({"current_time", "J(t) amplitude", {{"t", 0.0}, {"Q", 1.0}, {"gamma", 1.0}},
               {{"value"}}, [](const Params& p) {
                 return std::vector<double>{pc::current_time(charge(p), p.at("t"))};
               }});
  q.push_back({"current_freq", "J(omega) amplitude", {{"omega", 1.0}, {"Q", 1.0}, {"gamma", 1.0}},
               cplx("value"),
               [](const Params& p) { return split(pc::current_freq(charge(p), p.at("omega"))); }});
  q.push_back({"field_mixed", "E(omega, r)",
               {{"omega", -1.0}, {"r", 1.0}, {"Q", 1.0}, {"gamma", 1.0}}, cplx("value"),
               [](const Params& p) {
                 return split(pc::field_mixed(charge(p), p.at("omega"), p.at("r")));
               }});
  q.push_back({"field_momentum", "E(omega, k)",
               {{"omega", -1.0}, {"k", 2.0}, {"Q", 1.0}, {"gamma", 1.0}, {"printed", 0.0}},
               cplx("value"), [](const Params& p) {
                 return split(pc::field_momentum(
                     charge(p), p.at("omega"), p.at("k"), engine::LightConePrescription::principal_value,
                     p.at("printed") != 0.0 ? engine::KernelForm::printed
                                            : engine::KernelForm::fourier_consistent));
               }});
  q.push_back({"field_time", "E(t, r)",
               {{"t", 0.0}, {"r", 1.0}, {"Q", 1.0}, {"gamma", 1.0}, {"printed", 0.0}}, cplx("value"),
               [](const Params& p) {
                 return split(pc::field_time(charge(p), p.at("t"), p.at("r"),
                                             p.at("printed") != 0.0 ? pc::TimeFieldForm::printed
                                                                    : pc::TimeFieldForm::derived));
               }});
  for (const auto& [name, regime] : std::vector<std::pair<std::string, pc::Regime>>{
           {"field_asymptotic_low", pc::Regime::low_frequency},
           {"field_asymptotic_high", pc::Regime::high_frequency}}) {
    q.push_back({name, "asymptotic E(r)", {{"r", 1.0}, {"Q", 1.0}, {"gamma", 1.0}}, {{"value"}},
                 [regime = regime](const Params& p) {
                   return std::vector<double>{pc::field_asymptotic(charge(p), regime, p.at("r"))};
                 }});
  }
  for (const auto& [name, method] : std::vector<std::pair<std::string, pc::SelfEnergyMethod>>{
           {"self_energy", pc::SelfEnergyMethod::asymptotic_piecewise},
           {"self_energy_numeric", pc::SelfEnergyMethod::full_numeric}}) {
    q.push_back({name, "near-field self energy at t = 0", {{"Q", 1.0}, {"gamma", 1.0}},
                 {{"W", Dimension::inverse_time},
                  {"W_over_Q2gamma", Dimension::none},
                  {"ratio_to_asymptotic", Dimension::none}},
                 [method = method](const Params& p) {
                   const auto c = charge(p);
                   const auto w = pc::self_energy(c, method);
                   return std::vector<double>{w.value, w.value / (c.charge * c.charge * c.gamma),
                                              w.ratio_to_asymptotic};
                 }});
  }
  q.push_back({"charge_density", "rho(omega, r)",
               {{"omega", -1.0}, {"r", 1.0}, {"Q", 1.0}, {"gamma", 1.0}}, cplx("value"),
               [](const Params& p) {
                 return split(pc::charge_density_mixed(charge(p), p.at("omega"), p.at("r")));
               }});
  return q;
}

ftir::FtirConfig ftir_config(const Params& p) {
  return {p.at("n1"), p.at("n2"), p.at("phi"), p.at("omega"), p.at("alpha"), p.at("e0")};
}

std::vector<Quantity> ftir_quantities() {
  std::vector<Quantity> q;
  auto base = [](std::vector<std::pair<std::string, double>> extra) {
    std::vector<std::pair<std::string, double>> d = std::move(extra);
    const std::vector<std::pair<std::string, double>> common = {
        {"n1", 1.5}, {"n2", 1.0}, {"phi", pi / 3}, {"omega", 1.0}, {"alpha", 1.0}, {"e0", 1.0}};
    d.insert(d.end(), common.begin(), common.end());
    return d;
  };
  q.push_back({"refraction_profile", "n(z)", base({{"z", 0.0}}), {{"value"}}, [](const Params& p) {
                 return std::vector<double>{ftir::refraction_profile(ftir_config(p), p.at("z"))};
               }});
  q.push_back({"layer_geometry", "transition layer widths", base({}),
               {{"dz_medium", Dimension::length}, {"dz_vacuum", Dimension::length}},
               [](const Params& p) {
                 const auto g = ftir::layer_geometry(ftir_config(p));
                 return std::vector<double>{g.dz_medium, g.dz_vacuum};
               }});
  q.push_back({"current_factor", "I(q, dz)", {{"q", 0.0}, {"dz", 1.0}}, cplx("value", Dimension::length),
               [](const Params& p) { return split(ftir::current_factor(p.at("q"), p.at("dz"))); }});
  q.push_back({"layer_braces", "dz^-3 {I(-q, dz) + n^-4 I(q, n dz)}", base({{"q", 0.0}}),
               cplx("value"),
               [](const Params& p) { return split(ftir::layer_braces(ftir_config(p), p.at("q"))); }});
  q.push_back({"field_k", "near field in (t, k)", base({{"t", 0.0}, {"k", 2.0}, {"q", 1.0}}),
               cplx("value"), [](const Params& p) {
                 return split(ftir::field_k(ftir_config(p), p.at("t"), p.at("k"), p.at("q")));
               }});
  q.push_back({"field_k_small_q", "small-q braces", base({{"q", 0.0}}), {{"value"}},
               [](const Params& p) {
                 return std::vector<double>{ftir::field_k_small_q(ftir_config(p), p.at("q"))};
               }});
  q.push_back({"resolution_scale", "1/|k_z - q|", {{"q", 3.5}, {"kz", 1.5}},
               {{"value", Dimension::length}}, [](const Params& p) {
                 return std::vector<double>{ftir::resolution_scale(p.at("kz"), p.at("q"))};
               }});
  q.push_back({"field_real_space", "near field vector at (t, x, y, z)",
               base({{"t", 0.0}, {"x", 0.1}, {"y", 0.0}, {"z", 0.0}}),
               concat({cplx("E_x"), cplx("E_y"), cplx("E_z")}), [](const Params& p) {
                 const auto e = ftir::field_real_space(ftir_config(p), p.at("t"), p.at("x"),
                                                       p.at("y"), p.at("z"));
                 return std::vector<double>{e[0].real(), e[0].imag(), e[1].real(),
                                            e[1].imag(), e[2].real(), e[2].imag()};
               }});
  return q;
}

interactions::AtomModel atom(const Params& p, const char* dipole) {
  return {p.at("omega0"), p.at("linewidth"), p.at(dipole)};
}

std::vector<Quantity> interaction_quantities() {
  namespace ia = interactions;
  std::vector<Quantity> q;
  const std::vector<std::pair<std::string, double>> atoms = {
      {"omega0", 1.0}, {"linewidth", 0.01}, {"d1", 1.0}, {"d2", 1.0}};
  auto with = [&](std::vector<std::pair<std::string, double>> d) {
    d.insert(d.end(), atoms.begin(), atoms.end());
    return d;
  };
  const std::vector<Column> potential_cols = {
      {"U", Dimension::inverse_time}, {"U_imag_residue", Dimension::inverse_time}, {"regime_warning"}};
  q.push_back({"nonresonant_potential", "two-photon exchange potential U(R)",
               with({{"R", 5e-3}, {"full", 0.0}}), potential_cols, [](const Params& p) {
                 const auto u = ia::nonresonant_potential(
                     atom(p, "d1"), atom(p, "d2"), p.at("R"),
                     p.at("full") != 0.0 ? ia::PropagatorBlocks::full : ia::PropagatorBlocks::near_field);
                 return std::vector<double>{u.value, u.imaginary_residue, u.regime_warning ? 1.0 : 0.0};
               }});
  q.push_back({"resonant_potential", "resonant potential U(R)",
               with({{"R", 5e-3}, {"literal_re_alpha", 0.0}}), potential_cols, [](const Params& p) {
                 const auto u = ia::resonant_potential(
                     atom(p, "d1"), p.at("R"),
                     p.at("literal_re_alpha") != 0.0 ? ia::ResonantContraction::real_part_of_alpha
                                                     : ia::ResonantContraction::full_polarizability);
                 return std::vector<double>{u.value, u.imaginary_residue, u.regime_warning ? 1.0 : 0.0};
               }});
  q.push_back({"transfer_probability", "Forster transfer rate W(R)", with({{"R", 5e-3}}),
               {{"W", Dimension::inverse_time}, {"forster_radius", Dimension::length}, {"regime_warning"}},
               [](const Params& p) {
                 const auto w = ia::transfer_probability(atom(p, "d1"), atom(p, "d2"), p.at("R"));
                 return std::vector<double>{w.rate, w.forster_radius, w.regime_warning ? 1.0 : 0.0};
               }});
  q.push_back({"scattering_duration", "tau(omega)", with({{"omega", 1.0}}),
               {{"tau", Dimension::time}}, [](const Params& p) {
                 return std::vector<double>{ia::scattering_duration(atom(p, "d1"), p.at("omega"))};
               }});
  q.push_back({"polarizability", "alpha(omega)", with({{"omega", 0.0}}), cplx("alpha"),
               [](const Params& p) {
                 return split(ia::polarizability(atom(p, "d1"), complex(p.at("omega"), 0.0)));
               }});
  q.push_back({"transfer_split", "subluminal / superluminal weights", {{"T", 2.0}, {"R", 1.0}},
               {{"subluminal"}, {"superluminal"}}, [](const Params& p) {
                 const auto s = ia::transfer_split(p.at("R"), p.at("T"));
                 return std::vector<double>{s.subluminal, s.superluminal};
               }});
  return q;
}

const std::map<std::string, std::vector<Quantity>>& registry() {
  static const std::map<std::string, std::vector<Quantity>> r = {
      {"propagator", propagator_quantities()},
      {"decompose", decompose_quantities()},
      {"switching", switching_quantities()},
      {"point-charge", point_charge_quantities()},
      {"ftir", ftir_quantities()},
      {"interactions", interaction_quantities()},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& scan_targets() {
  static const std::vector<std::string> t = {"propagator", "decompose", "switching",
                                             "point-charge", "ftir", "interactions"};
  return t;
}

const std::vector<Quantity>& scan_quantities(const std::string& target) {
  const auto& r = registry();
  const auto it = r.find(target);
  if (it == r.end()) throw ValidationError("target: unknown target '" + target + "'");
  return it->second;
}

const Quantity& find_quantity(const std::string& target, const std::string& name) {
  const auto& qs = scan_quantities(target);
  if (name.empty()) return qs.front();
  for (const auto& q : qs)
    if (q.name == name) return q;
  throw ValidationError("quantity: '" + name + "' is not available for target '" + target + "'");
}

Dimension parameter_dimension(const std::string& name) {
  static const std::map<std::string, Dimension> dims = {
      {"t", Dimension::time},          {"T", Dimension::time},
      {"r", Dimension::length},        {"R", Dimension::length},
      {"x", Dimension::length},        {"y", Dimension::length},
      {"z", Dimension::length},        {"dz", Dimension::length},
      {"mu", Dimension::length},       {"k", Dimension::inverse_length},
      {"q", Dimension::inverse_length}, {"kz", Dimension::inverse_length},
      {"kappa", Dimension::inverse_length}, {"omega", Dimension::inverse_time},
      {"omega0", Dimension::inverse_time}, {"gamma", Dimension::inverse_time},
      {"linewidth", Dimension::inverse_time}};
  const auto it = dims.find(name);
  return it == dims.end() ? Dimension::none : it->second;
}

ResultTable run_scan(const ScanRequest& req) {
  const Quantity& q = find_quantity(req.target, req.quantity);
  req.grid.validate();
  req.units.validate();
  Params base;
  for (const auto& [k, v] : q.defaults) base[k] = v;
  for (const auto& [k, v] : req.parameters) {
    if (!base.count(k))
      throw ValidationError("parameter '" + k + "' is not used by " + req.target + "/" + q.name);
    if (!std::isfinite(v)) throw ValidationError("parameter '" + k + "' must be finite");
    base[k] = v;
  }
  if (!base.count(req.grid.axis))
    throw ValidationError("grid axis '" + req.grid.axis + "' is not a parameter of " + req.target +
                          "/" + q.name);

  ResultTable table;
  table.columns.push_back({req.grid.axis, parameter_dimension(req.grid.axis)});
  table.columns.insert(table.columns.end(), q.outputs.begin(), q.outputs.end());
  const std::vector<double> axis = req.grid.points();
  table.rows.assign(axis.size(), {});

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failure_index = axis.size();
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= axis.size()) return;
      try {
        Params p = base;
        p[req.grid.axis] = axis[i];
        std::vector<double> row = {axis[i]};
        const auto values = q.eval(p);
        row.insert(row.end(), values.begin(), values.end());
        table.rows[i] = std::move(row);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        // report the first failing grid point, independent of scheduling
        if (i < failure_index) {
          failure_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  const int threads = std::max(1, std::min<int>(req.threads, int(axis.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

std::string request_meta_json(const ScanRequest& req) {
  using nlohmann::ordered_json;
  const Quantity& q = find_quantity(req.target, req.quantity);
  ordered_json meta;
  ordered_json request;
  request["target"] = req.target;
  request["quantity"] = q.name;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : req.parameters) params[k] = v;
  request["parameters"] = params;
  request["grid"] = {{"axis", req.grid.axis},
                     {"min", req.grid.min},
                     {"max", req.grid.max},
                     {"count", req.grid.count},
                     {"spacing", req.grid.log ? "log" : "linear"}};
  request["format"] = req.format == OutputFormat::csv ? "csv" : "json";
  request["unit_scale"] = {{"length", req.units.length}, {"time", req.units.time}};
  meta["request"] = request;
  meta["tool"] = "nearfield";
  meta["version"] = NEARFIELD_VERSION;
  meta["units"] = "natural (c = hbar = 1), scaled to SI by unit_scale on output";
  meta["ft_conventions"] = {
      {"propagators", {{"exponent_sign", -1}, {"prefactor", "1"}}},
      {"switching", {{"exponent_sign", -1}, {"prefactor", "1/(2pi)"}}},
      {"point_charge", {{"exponent_sign", -1}, {"prefactor", "1/(2pi)"}}}};
  meta["step_function_at_zero"] = 0.5;
  return meta.dump(2);
}

std::string render(const ResultTable& table, const ScanRequest& req) {
  if (req.format == OutputFormat::csv) return to_csv(table, req.units);
  return to_json(table, req.units, request_meta_json(req));
}

}  // namespace nearfield::cli
