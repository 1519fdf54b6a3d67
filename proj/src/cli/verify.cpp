#include "nearfield/cli/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>

#include "nearfield/cli/scan.hpp"
#include "nearfield/engine.hpp"
#include "nearfield/errors.hpp"
#include "nearfield/ftir.hpp"
#include "nearfield/interactions.hpp"
#include "nearfield/numerics.hpp"
#include "nearfield/point_charge.hpp"
#include "nearfield/propagators.hpp"
#include "nearfield/switching.hpp"

namespace nearfield::cli {

namespace {

namespace nm = nearfield::numerics;

// What a check reports back: the worst error seen and a short note.
struct Outcome {
  double measured = 0.0;
  bool ok = true;  // extra conditions beyond measured <= tolerance
  std::string detail;
};

struct Check {
  std::string id;
  std::string name;
  std::string suite;
  double tolerance;
  double budget_s;
  std::function<Outcome()> run;
};

double rel(complex a, complex b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(4);
  os << v;
  return os.str();
}

// ---- numerics

Outcome check_special_functions() {
  const complex e = nm::erf_complex({1.0, 1.0});
  const double err_erf = rel(e, {1.3161512816979476, 0.19045346923783471});
  const double err_shi = std::abs(nm::shi(1.0) - 1.0572508753757285) / 1.0572508753757285;
  const double err_chi = std::abs(nm::chi(1.0) - 0.83786694098020824) / 0.83786694098020824;
  const double err_erfi = std::abs(nm::erfi(1.0) - 1.6504257587975429) / 1.6504257587975429;
  return {std::max({err_erf, err_shi, err_chi, err_erfi}), true,
          "erf(1+i), erfi(1), Shi(1), Chi(1) against reference values"};
}

Outcome check_power_law() {
  std::vector<std::pair<double, double>> s;
  for (int i = 0; i < 8; ++i) {
    const double x = std::pow(10.0, -3.0 + i / 7.0);
    s.emplace_back(x, 3.0 * std::pow(x, -2.0));
  }
  const auto fit = nm::fit_power_law(s);
  return {std::abs(fit.slope + 2.0), true, "slope of 3 x^-2 = " + fmt(fit.slope)};
}

// ---- propagators

Outcome check_pairing_identity() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> width(0.4, 1.5);
  double worst = 0.0;
  const nm::QuadratureSpec spec{1e-13, 1e-12, 4000, {}};
  for (int k = 0; k < 10; ++k) {
    const double p0 = coef(rng), p1 = coef(rng), c = coef(rng), w = width(rng);
    const auto phi = nm::gaussian_packet(p0, p1, c, w);
    for (double r : {0.5, 1.0, 2.0}) {
      const double lhs = nm::pair_second_derivative_with_dn(r, phi, spec);
      const double rhs = nm::pair_with_test_function(nm::DistributionId::D, r, phi, spec);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return {worst, true, "10 seeded packets x r in {0.5, 1, 2}"};
}

Outcome check_cone_derivative() {
  double worst = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    const double h = 1e-4 * r;
    const double exact = -1.0 / (4.0 * pi * r);
    for (int i = 0; i < 100; ++i) {
      const double t = -0.99 * r + 1.98 * r * i / 99.0;
      const double fd =
          (propagators::schwinger_dn(t + h, r) - propagators::schwinger_dn(t - h, r)) / (2 * h);
      worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
    }
  }
  return {worst, true, "central differences, 100 points inside the cone, r in {0.5, 1, 2}"};
}

Outcome check_dn_transform() {
  double worst = 0.0;
  int count = 0;
  const nm::QuadratureSpec spec{1e-13, 1e-11, 4000, {}};
  for (double r : {0.5, 1.0, 1.7, 3.0}) {
    for (double x : {0.5, 1.3, 2.2, 4.0, 5.0}) {
      for (double s : {-1.0, 1.0}) {
        const double omega = s * x / r;
        nm::FourierOptions opts;
        opts.breakpoints = {-r, r};
        auto f = [r](double t) { return propagators::schwinger_dn(t, r); };
        const complex numeric =
            nm::ft_windowed_extrapolated(f, omega, nm::FtConvention::propagator(), spec, opts);
        const complex closed =
            propagators::singular_mixed(propagators::MixedKind::D_N, {omega, r});
        worst = std::max(worst, rel(numeric, closed));
        ++count;
      }
    }
  }
  return {worst, true, std::to_string(count) + " (omega, r) pairs, 0.5 <= |omega| r <= 5"};
}

Outcome check_superluminal_split() {
  double worst = 0.0;
  Outcome o;
  for (double r : {0.5, 1.0, 3.0}) {
    const double f = propagators::superluminal_fraction(r, 2 * r);
    auto g = [r](double t) { return propagators::nf_squared({t, r}); };
    const nm::QuadratureSpec spec{1e-300, 1e-13, 4000, {}};
    const double inside = nm::integrate(g, -r, r, spec).value;
    const double total = inside + 2.0 * nm::integrate(g, r, 2 * r, spec).value;
    worst = std::max({worst, std::abs(f - 0.25), std::abs(inside / total - 0.25)});
    const double near = propagators::superluminal_fraction(r, 1.001 * r);
    const double far = propagators::superluminal_fraction(r, 1e4 * r);
    if (!(std::abs(near - 1.0) < 1e-2 && far < 1e-2)) o.ok = false;
    o.detail = "T = 1.001 r -> " + fmt(near) + ", T = 1e4 r -> " + fmt(far);
  }
  o.measured = worst;
  return o;
}

// ---- switching

Outcome check_switching_pairs() {
  using switching::TemporalForm;
  const std::array<switching::SwitchingSpec, 3> specs = {{{TemporalForm::g1, 1.0, 0.0},
                                                          {TemporalForm::g2, 1.0, 0.0},
                                                          {TemporalForm::g1_two_level, 1.0, 3.0}}};
  const nm::QuadratureSpec spec{1e-14, 1e-13, 4000, {}};
  double worst = 0.0;
  double norm_err = 0.0;
  for (const auto& s : specs) {
    auto g = [&s](double t) { return switching::fis_time(s, t); };
    nm::FourierOptions opts;
    opts.breakpoints = {0.0};
    for (int i = 0; i <= 40; ++i) {
      const double omega = -10.0 * s.gamma + 20.0 * s.gamma * i / 40.0;
      const complex numeric = nm::ft_numeric(g, omega, switching::convention(), spec, opts);
      worst = std::max(worst, std::abs(numeric - switching::fis_freq(s, omega)));
    }
    auto G = [&s](double w) { return switching::fis_freq(s, w); };
    const std::array<double, 7> pts = {-INFINITY, -s.omega0 - 1.0, -s.omega0, 0.0,
                                       s.omega0,  s.omega0 + 1.0,  INFINITY};
    const double total = nm::integrate_pieces(G, pts, {1e-15, 1e-13, 4000, {}}).value;
    norm_err = std::max(norm_err, std::abs(total - 1.0));
  }
  Outcome o{worst, norm_err < 1e-8,
            "g1, g2, two-level (omega0 = 3) on 41 points; max |int g - 1| = " + fmt(norm_err)};
  return o;
}

Outcome check_delta_limit() {
  using switching::TemporalForm;
  Outcome o;
  double worst_final = 0.0;
  for (auto form : {TemporalForm::g1, TemporalForm::g2}) {
    double previous = INFINITY;
    for (double gamma : {1e-1, 1e-2, 1e-3}) {
      const switching::SwitchingSpec s{form, gamma, 0.0};
      auto f = [&s](double w) { return switching::fis_freq(s, w) * std::exp(-0.5 * w * w); };
      const std::array<double, 9> pts = {-INFINITY, -100 * gamma, -10 * gamma, -gamma, 0.0,
                                         gamma,     10 * gamma,   100 * gamma, INFINITY};
      const double err =
          std::abs(nm::integrate_pieces(f, pts, {1e-15, 1e-12, 4000, {}}).value - 1.0);
      if (!(err < previous)) o.ok = false;
      previous = err;
    }
    worst_final = std::max(worst_final, previous);
  }
  o.measured = worst_final;
  o.detail = "|<g, exp(-w^2/2)> - 1| at gamma = 1e-3, decreasing over gamma = 1e-1, 1e-2, 1e-3";
  return o;
}

// ---- nearfield_engine

// (2pi)^-3 (4pi/k) int_0^inf r sin(k r) K(w, r) dr. Beyond r0 the integrand
// is split into its two plane-wave frequencies k + w and k - w, each summed
// over its own half periods.
complex radial_transform_of_kernel(double omega, double k, double eps) {
  const nm::QuadratureSpec spec{1e-14, 1e-11, 4000, {}};
  const double r0 = 2.0 * pi / std::max(k, std::abs(omega));
  auto body = [&](double r) {
    return r * std::sin(k * r) * engine::kernel_mixed(omega, r) * std::exp(-eps * r);
  };
  complex total = nm::integrate(body, 0.0, r0, spec).value;
  const complex c = 1.0 / (2.0 * pi * I * omega);
  for (double sign : {+1.0, -1.0}) {
    const double p = k + sign * omega;
    auto piece = [&](double r) {
      return c * 0.5 * (omega * std::sin(p * r) + sign * std::cos(p * r) / r) * std::exp(-eps * r);
    };
    total += nm::integrate_tail(piece, r0, +1, pi / std::abs(p), spec).value;
  }
  return total * 4.0 * pi / k / std::pow(2.0 * pi, 3);
}

Outcome check_kernel_transform() {
  double worst = 0.0;
  for (double omega : {-0.5, -1.0, -1.5, -2.0, -3.0}) {
    for (double ratio : {0.5, 2.0}) {
      const double k = ratio * std::abs(omega);
      const std::array<double, 3> eps = {1e-2, 5e-3, 2.5e-3};
      std::array<complex, 3> vals;
      for (std::size_t i = 0; i < 3; ++i) vals[i] = radial_transform_of_kernel(omega, k, eps[i]);
      const complex numeric = nm::extrapolate_to_zero(eps, vals);
      worst = std::max(worst, rel(numeric, engine::kernel_momentum(omega, k)));
    }
  }
  return {worst, true, "10 points, k/|omega| in {0.5, 2}"};
}

// ---- point_charge

Outcome check_self_energy() {
  const double closed = 7.0 / (24.0 * std::pow(pi, 4));
  double worst = 0.0;
  for (double gamma : {1.0, 2.0, 4.0}) {
    for (double q : {1.0, 0.5}) {
      const point_charge::ChargeConfig cfg{q, gamma};
      const auto w = point_charge::self_energy(cfg, point_charge::SelfEnergyMethod::asymptotic_piecewise);
      worst = std::max(worst, std::abs(w.value / (q * q * gamma) - closed));
    }
  }
  const auto numeric =
      point_charge::self_energy({1.0, 1.0}, point_charge::SelfEnergyMethod::full_numeric);
  const double ratio = numeric.ratio_to_asymptotic;
  return {worst, ratio >= 0.5 && ratio <= 2.0,
          "W/(Q^2 gamma) vs 7/(24 pi^4); full numeric ratio = " + fmt(ratio)};
}

Outcome check_time_field() {
  const point_charge::ChargeConfig cfg{1.0, 1.0};
  const std::array<std::pair<double, double>, 5> pts = {
      {{0.3, 1.0}, {0.0, 0.5}, {1.5, 1.0}, {-0.7, 2.0}, {0.2, 3.0}}};
  const nm::QuadratureSpec spec{1e-14, 1e-11, 4000, {}};
  double worst = 0.0;
  for (const auto& [t, r] : pts) {
    auto f = [&cfg, r = r](double w) { return point_charge::field_mixed(cfg, w, r); };
    nm::FourierOptions opts;
    opts.breakpoints = {0.0};
    opts.block_length = pi / (std::abs(t) + r);
    const complex numeric =
        nm::ft_inverse_windowed_extrapolated(f, t, nm::FtConvention::switching(), spec, opts);
    worst = std::max(worst, rel(point_charge::field_time(cfg, t, r), numeric));
  }
  return {worst, true, "5 off-cone (t, r) points, Q = gamma = 1"};
}

// ---- ftir

Outcome check_current_factor() {
  double worst = 0.0;
  const double dz = 1.0;
  const nm::QuadratureSpec spec{1e-15, 1e-13, 4000, {}};
  for (int i = 0; i < 50; ++i) {
    const double q = 5.0 * i / 49.0 / dz;
    auto f = [q, dz](double s) { return std::exp(complex(-2.0 * s * s / (dz * dz), q * s)); };
    const complex direct = nm::integrate(f, 0.0, INFINITY, spec).value;
    worst = std::max(worst, rel(ftir::current_factor(q, dz), direct));
  }
  return {worst, true, "50 points, q dz in [0, 5]"};
}

Outcome check_small_q() {
  const ftir::FtirConfig cfg;
  const double dz = ftir::layer_geometry(cfg).dz_medium;
  auto diff = [&](double qdz) {
    const double q = qdz / dz;
    const double braces = std::abs(ftir::layer_braces(cfg, q));
    return std::abs(ftir::field_k_small_q(cfg, q) - braces) / braces;
  };
  const double d1 = diff(0.1);
  const double d2 = diff(0.01);
  // measured is reported against the tighter 1e-4 bound; the 1% one is a side condition
  return {d2, d1 < 1e-2, "q dz = 0.1 -> " + fmt(d1) + ", q dz = 0.01 -> " + fmt(d2)};
}

// ---- interactions

Outcome check_scaling_laws() {
  const interactions::AtomModel atom{1.0, 0.01, 1.0};
  std::vector<std::pair<double, double>> nonres, res, forster;
  for (int i = 0; i < 8; ++i) {
    const double R = std::pow(10.0, -3.0 + i / 7.0);
    nonres.emplace_back(R, std::abs(interactions::nonresonant_potential(atom, atom, R).value));
    res.emplace_back(R, std::abs(interactions::resonant_potential(atom, R).value));
    forster.emplace_back(R, interactions::transfer_probability(atom, atom, R).rate);
  }
  const double s_nr = nm::fit_power_law(nonres).slope;
  const double s_r = nm::fit_power_law(res).slope;
  const double s_w = nm::fit_power_law(forster).slope;
  const double worst = std::max({std::abs(s_nr + 6.0), std::abs(s_r + 3.0), std::abs(s_w + 6.0)});
  return {worst, true,
          "slopes: nonresonant " + fmt(s_nr) + ", resonant " + fmt(s_r) + ", transfer " + fmt(s_w)};
}

// ---- cli

Outcome check_determinism() {
  ScanRequest a;
  a.target = "propagator";
  a.quantity = "D_N";
  a.grid = GridSpec::parse("t:-2:2:101");
  a.threads = 4;
  ScanRequest b;
  b.target = "point-charge";
  b.quantity = "self_energy";
  b.grid = GridSpec::parse("gamma:1:4:3");
  b.threads = 3;
  int mismatches = 0;
  for (auto req : {a, b}) {
    for (auto format : {OutputFormat::csv, OutputFormat::json}) {
      req.format = format;
      const std::string first = render(run_scan(req), req);
      const std::string second = render(run_scan(req), req);
      if (first != second) ++mismatches;
    }
  }
  return {double(mismatches), true, "two renders each of 2 requests x {csv, json}"};
}

const std::vector<Check>& checks() {
  static const std::vector<Check> list = {
      {"NUM-01", "special function reference values", "numerics", 1e-12, 1.0, check_special_functions},
      {"NUM-02", "power-law fit recovers an exact exponent", "numerics", 1e-12, 1.0, check_power_law},
      {"AC-01", "self-energy coefficient 7/(24 pi^4)", "point_charge", 1e-12, 5.0, check_self_energy},
      {"AC-02", "second-derivative pairing of D_N equals D", "propagators", 1e-8, 2.0,
       check_pairing_identity},
      {"AC-03", "d_t D_N = -1/(4 pi r) inside the cone", "propagators", 1e-6, 1.0,
       check_cone_derivative},
      {"AC-04", "numeric transform of D_N matches the mixed form", "propagators", 1e-4, 30.0,
       check_dn_transform},
      {"AC-05", "switching function transform pairs", "switching", 1e-10, 10.0, check_switching_pairs},
      {"AC-06", "current factor closed form vs quadrature", "ftir", 1e-8, 5.0, check_current_factor},
      {"AC-07", "small-q limit of the layer braces", "ftir", 1e-4, 1.0, check_small_q},
      {"AC-08", "radial transform of the mixed kernel", "nearfield_engine", 1e-3, 60.0,
       check_kernel_transform},
      {"AC-09", "time-domain field vs inverse transform", "point_charge", 1e-3, 60.0, check_time_field},
      {"AC-10", "near-zone scaling exponents", "interactions", 0.02, 120.0, check_scaling_laws},
      {"AC-11", "superluminal share of |D_NF|^2", "propagators", 1e-10, 1.0, check_superluminal_split},
      {"AC-12", "delta limit of switching functions", "switching", 1e-3, 5.0, check_delta_limit},
      {"AC-13", "scan output is byte-identical across runs", "cli", 0.0, 5.0, check_determinism},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s = {"all",      "numerics",         "propagators",
                                             "switching", "nearfield_engine", "point_charge",
                                             "ftir",     "interactions",     "cli"};
  return s;
}

VerifyReport run_verify(const std::string& suite) {
  const auto& suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw ValidationError("suite: unknown suite '" + suite + "'");
  VerifyReport report;
  report.suite = suite;
  for (const auto& c : checks()) {
    if (suite != "all" && c.suite != suite) continue;
    Criterion out;
    out.id = c.id;
    out.name = c.name;
    out.suite = c.suite;
    out.tolerance = c.tolerance;
    out.budget_s = c.budget_s;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run();
      out.measured = o.measured;
      out.detail = o.detail;
      out.passed = o.ok && std::isfinite(o.measured) && o.measured <= c.tolerance;
    } catch (const std::exception& e) {
      out.measured = NAN;
      out.passed = false;
      out.detail = std::string("exception: ") + e.what();
    }
    out.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.runtime_s > c.budget_s) {
      out.passed = false;
      out.detail += " (over runtime budget)";
    }
    report.criteria.push_back(std::move(out));
  }
  return report;
}

bool VerifyReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const Criterion& c) { return c.passed || !c.gated; });
}

std::string VerifyReport::json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["version"] = NEARFIELD_VERSION;
  j["passed"] = passed();
  auto& list = j["criteria"] = nlohmann::ordered_json::array();
  for (const auto& c : criteria) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["suite"] = c.suite;
    if (std::isfinite(c.measured)) e["measured"] = c.measured;
    else e["measured"] = nullptr;
    e["tolerance"] = c.tolerance;
    e["passed"] = c.passed;
    e["gated"] = c.gated;
    e["runtime_s"] = c.runtime_s;
    e["budget_s"] = c.budget_s;
    e["detail"] = c.detail;
    list.push_back(e);
  }
  return j.dump(2);
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  int pass = 0;
  for (const auto& c : criteria) {
    pass += c.passed;
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.name << "  measured=" << fmt(c.measured)
       << " tol=" << fmt(c.tolerance) << " time=" << fmt(c.runtime_s) << "s";
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << pass << "/" << criteria.size() << " criteria passed\n";
  return os.str();
}

}  // namespace nearfield::cli
