#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "nearfield/errors.hpp"
#include "nearfield/numerics.hpp"
#include "nearfield/point_charge.hpp"

using namespace nearfield;
using namespace nearfield::point_charge;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("current in time and frequency", "[point_charge]") {
  const ChargeConfig cfg{1.0, 1.0};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double t = u(rng);
    CHECK(current_time(cfg, -t) == -current_time(cfg, t));
  }
  CHECK_THAT(current_freq(cfg, 1.0).imag(), WithinRel(1.0 / (2 * pi), 1e-15));
  numerics::FourierOptions opts;
  opts.breakpoints = {0.0};
  auto j = [&](double t) { return current_time(cfg, t); };
  const complex ft = numerics::ft_numeric(j, 2.0, numerics::FtConvention::switching(), {}, opts);
  CHECK_THAT(ft.imag(), WithinRel(2.0 / (5 * pi), 1e-10));
  CHECK_THAT(ft.real(), WithinAbs(0.0, 1e-12));
  CHECK_THROWS_AS(current_time({1.0, 0.0}, 1.0), DomainError);
}

TEST_CASE("field in the mixed representation", "[point_charge]") {
  const ChargeConfig cfg{1.0, 1.0};
  CHECK(field_mixed(cfg, 0.5, 1.0) == complex(0.0));
  // small-r behaviour Q gamma^2 r / (12 pi^2) at w = -gamma
  CHECK_THAT(field_mixed(cfg, -1.0, 0.1).real(), WithinRel(8.443e-4, 1e-3));
  CHECK_THAT(field_mixed(cfg, -1.0, 1e-3).real(), WithinRel(1e-3 / (12 * pi * pi), 1e-6));
}

TEST_CASE("field in the momentum representation", "[point_charge]") {
  const ChargeConfig cfg{1.0, 1.0};
  CHECK(field_momentum(cfg, 1.0, 2.0) == complex(0.0));
  const complex printed = field_momentum(cfg, -1.0, 2.0, engine::LightConePrescription::principal_value,
                                         engine::KernelForm::printed);
  CHECK_THAT(printed.real(), WithinRel((-4.0 / 3.0 - std::log(3.0)) / (8 * pi * pi * pi), 1e-14));
  CHECK_THAT(printed.real(), WithinRel(-0.0098174, 2e-3));
  const complex consistent = field_momentum(cfg, -1.0, 2.0);
  CHECK(std::abs(consistent - engine::kernel_momentum(-1.0, 2.0) * current_freq(cfg, -1.0)) < 1e-18);
}

TEST_CASE("momentum field is the radial transform of the mixed field", "[point_charge][oracle]") {
  const ChargeConfig cfg{1.0, 1.0};
  const double w = -1.0, k = 2.0;
  auto transform = [&](double eps) {
    auto f = [&](double r) { return r * std::sin(k * r) * field_mixed(cfg, w, r) * std::exp(-eps * r); };
    complex s = numerics::integrate(f, 0.0, pi, {1e-14, 1e-12, 4000, {}}).value;
    s += numerics::integrate_tail(f, pi, +1, pi, {1e-14, 1e-12, 4000, {}}).value;
    return s * 4.0 * pi / k / std::pow(2 * pi, 3);
  };
  const std::array<double, 3> eps = {1e-2, 5e-3, 2.5e-3};
  const std::array<complex, 3> vals = {transform(eps[0]), transform(eps[1]), transform(eps[2])};
  const complex numeric = numerics::extrapolate_to_zero(eps, vals);
  const complex closed = field_momentum(cfg, w, k);
  CHECK(std::abs(numeric - closed) < 1e-3 * std::abs(closed));
}

TEST_CASE("time-domain field against the inverse transform", "[point_charge][oracle]") {
  const ChargeConfig cfg{1.0, 1.0};
  const double t = 0.3, r = 1.0;
  auto f = [&](double w) { return field_mixed(cfg, w, r); };
  numerics::FourierOptions opts;
  opts.breakpoints = {0.0};
  opts.block_length = pi / (t + r);
  const complex numeric = numerics::ft_inverse_windowed_extrapolated(
      f, t, numerics::FtConvention::switching(), {1e-14, 1e-11, 4000, {}}, opts);
  const complex closed = field_time(cfg, t, r);
  CHECK(std::abs(numeric - closed) < 1e-3 * std::abs(closed));
  CHECK_THROWS_AS(field_time(cfg, 1.0, 1.0), ConeSingularityError);
}

TEST_CASE("time-domain field falls off as r^-3", "[point_charge]") {
  const ChargeConfig cfg{1.0, 2.0};
  std::vector<std::pair<double, double>> s;
  for (int i = 0; i < 8; ++i) {
    const double r = (10.0 + 90.0 * i / 7.0) / cfg.gamma;
    s.emplace_back(r, std::abs(field_time(cfg, 0.0, r)));
  }
  CHECK_THAT(numerics::fit_power_law(s).slope, WithinAbs(-3.0, 0.02));
  const double a = std::abs(field_time(cfg, 0.0, 50.0)) * std::pow(50.0, 3);
  const double b = std::abs(field_time(cfg, 0.0, 100.0)) * std::pow(100.0, 3);
  CHECK_THAT(a, WithinRel(b, 5e-3));
}

TEST_CASE("printed time-domain form is kept as an option", "[point_charge]") {
  const ChargeConfig cfg{1.0, 1.0};
  const complex d = field_time(cfg, 0.0, 2.0);
  const complex p = field_time(cfg, 0.0, 2.0, TimeFieldForm::printed);
  CHECK(std::isfinite(p.real()));
  CHECK(d != p);
}

TEST_CASE("hyperbolic combination", "[point_charge]") {
  for (double x : {0.05, 0.7, 3.0, 6.0}) {
    const double direct = numerics::chi(x) * std::sinh(x) - numerics::shi(x) * std::cosh(x);
    CHECK_THAT(hyperbolic_combination(x), WithinRel(direct, 1e-9));
    CHECK(hyperbolic_combination(-x) == -hyperbolic_combination(x));
  }
  // stays accurate where the direct form cancels
  CHECK_THAT(hyperbolic_combination(200.0), WithinRel(-1.0 / 200.0, 1e-3));
}

TEST_CASE("asymptotic regimes", "[point_charge]") {
  const ChargeConfig cfg{1.0, 1.0};
  CHECK_THAT(field_asymptotic(cfg, Regime::low_frequency, 1.0), WithinRel(-1.0 / (pi * pi), 1e-15));
  CHECK_THAT(field_asymptotic(cfg, Regime::high_frequency, 1.0), WithinRel(-0.5 / (pi * pi), 1e-15));
  const ChargeConfig c2{0.7, 3.0};
  const double rc = std::sqrt(2.0) / c2.gamma;
  CHECK_THAT(field_asymptotic(c2, Regime::low_frequency, rc),
             WithinRel(field_asymptotic(c2, Regime::high_frequency, rc), 1e-14));
}

TEST_CASE("self-energy", "[point_charge]") {
  const double coef = 7.0 / (24.0 * std::pow(pi, 4));
  CHECK_THAT(coef, WithinRel(2.994e-3, 1e-3));
  CHECK_THAT(1.0 / (6 * std::pow(pi, 4)) + 1.0 / (8 * std::pow(pi, 4)), WithinRel(coef, 1e-15));
  for (double g : {1.0, 2.0, 4.0}) {
    const auto w = self_energy({1.0, g}, SelfEnergyMethod::asymptotic_piecewise);
    CHECK_THAT(w.value / g, WithinRel(coef, 1e-14));
  }
  const auto n1 = self_energy({1.0, 1.0}, SelfEnergyMethod::full_numeric);
  const auto n2 = self_energy({1.0, 2.0}, SelfEnergyMethod::full_numeric);
  CHECK_THAT(n2.value / n1.value, WithinRel(2.0, 1e-12));
  CHECK(n1.ratio_to_asymptotic > 0.5);
  CHECK(n1.ratio_to_asymptotic < 2.0);
  CHECK_THAT(self_energy({3.0, 1.0}, SelfEnergyMethod::full_numeric).value, WithinRel(9.0 * n1.value, 1e-12));
}

TEST_CASE("effective charge density", "[point_charge]") {
  const ChargeConfig cfg{1.0, 1.0};
  CHECK(std::abs(charge_density_mixed(cfg, -pi, 1.0)) < 1e-17);
  CHECK(std::abs(charge_density_mixed(cfg, -1.0, 2 * pi)) < 1e-17);
  CHECK_THAT(charge_density_mixed(cfg, -1.0, 1.0).imag(),
             WithinRel(-std::sin(1.0) / (2 * std::pow(2 * pi, 3)), 1e-14));
  CHECK_THAT(std::abs(charge_density_mixed(cfg, -1.0, 1.0)), WithinRel(0.0016961, 1e-4));
  CHECK(charge_density_mixed(cfg, 1.0, 1.0) == complex(0.0));
  // ~ w^2 at low frequency
  const double a = std::abs(charge_density_mixed(cfg, -1e-3, 1.0));
  const double b = std::abs(charge_density_mixed(cfg, -2e-3, 1.0));
  CHECK_THAT(b / a, WithinRel(8.0, 1e-5));  // w^2 times sin(w r) ~ w
  auto f = [&](double r) { return charge_density_mixed(cfg, -2.0, r).imag() * r; };
  CHECK(std::abs(numerics::integrate(f, 0.0, pi, {}).value) < 1e-10);
  const complex ratio = charge_density_high_frequency_ratio(cfg, -50.0, 0.3);
  CHECK(std::isfinite(std::abs(ratio)));
}
