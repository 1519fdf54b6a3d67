#include "nearfield/point_charge.hpp"

#include <array>
#include <cmath>

#include "nearfield/errors.hpp"
#include "nearfield/numerics/special_functions.hpp"

namespace nearfield::point_charge {

void ChargeConfig::validate() const {
  if (!(gamma > 0)) throw DomainError("ChargeConfig: gamma must be positive");
  if (!std::isfinite(charge)) throw DomainError("ChargeConfig: charge must be finite");
}

double current_time(const ChargeConfig& cfg, double t) {
  cfg.validate();
  return -cfg.gamma * cfg.charge * sgn(t) * std::exp(-cfg.gamma * std::abs(t));
}

complex current_freq(const ChargeConfig& cfg, double omega) {
  cfg.validate();
  const double g = cfg.gamma;
  return complex(0.0, g * cfg.charge * omega / (pi * (omega * omega + g * g)));
}

engine::GeneralizedCurrent as_current(const ChargeConfig& cfg) {
  cfg.validate();
  return engine::GeneralizedCurrent::point_source([cfg](double w) { return current_freq(cfg, w); });
}

complex field_mixed(const ChargeConfig& cfg, double omega, double r) {
  cfg.validate();
  if (!(r > 0)) throw DomainError("field_mixed: r must be positive");
  const double g = cfg.gamma;
  const double pref = theta(-omega) * g * cfg.charge / (2.0 * pi * pi * (omega * omega + g * g));
  return pref * engine::radial_derivative_sinc(omega, r);
}

complex field_momentum(const ChargeConfig& cfg, double omega, double k,
                       engine::LightConePrescription prescription, engine::KernelForm form) {
  cfg.validate();
  if (form == engine::KernelForm::fourier_consistent)
    return engine::kernel_momentum(omega, k, prescription, form) * current_freq(cfg, omega);
  if (!(k > 0)) throw DomainError("field_momentum: k must be positive");
  if (k == std::abs(omega)) throw ConeSingularityError("field_momentum: light cone k = |omega|");
  if (omega >= 0) return 0.0;
  const double g = cfg.gamma;
  complex brace = 4.0 * omega / (k * k - omega * omega) - std::log(std::abs((k - omega) / (k + omega)));
  if (prescription == engine::LightConePrescription::minus_i0 && k < std::abs(omega))
    brace -= complex(0.0, pi);
  return g * cfg.charge / (4.0 * pi * pi * pi * (omega * omega + g * g)) * brace;
}

double hyperbolic_combination(double x) {
  if (x == 0.0) return 0.0;
  const double a = std::abs(x);
  const double v = -0.5 * (numerics::expint_ei_scaled(a) + numerics::expint_e1_scaled(a));
  return x > 0 ? v : -v;
}

namespace {

// d/dx of hyperbolic_combination; even, log singular at 0.
double hyperbolic_combination_derivative(double x) {
  const double a = std::abs(x);
  return 0.5 * (numerics::expint_ei_scaled(a) - numerics::expint_e1_scaled(a));
}

}  // namespace

complex field_time(const ChargeConfig& cfg, double t, double r, TimeFieldForm form) {
  cfg.validate();
  if (!(r > 0)) throw DomainError("field_time: r must be positive");
  if (std::abs(t) == r) throw ConeSingularityError("field_time: light cone |t| = r");
  const double g = cfg.gamma;
  const double s = form == TimeFieldForm::derived ? -2.0 : 2.0;
  const double pref = form == TimeFieldForm::derived ? cfg.charge / (8.0 * pi * pi)
                                                     : 2.0 * cfg.charge / std::pow(2.0 * pi, 3);
  // B(b) = i pi exp(-|b|) + s Phi(b)
  auto B = [&](double b) { return complex(s * hyperbolic_combination(b), pi * std::exp(-std::abs(b))); };
  auto dB = [&](double b) {
    return complex(s * hyperbolic_combination_derivative(b), -pi * sgn(b) * std::exp(-std::abs(b)));
  };
  const double b1 = g * (t - r);
  const double b2 = g * (t + r);
  const complex d1 = -B(b1) / (r * r) - g * dB(b1) / r;
  const complex d2 = -B(b2) / (r * r) + g * dB(b2) / r;
  return pref * (d1 - d2);
}

double field_asymptotic(const ChargeConfig& cfg, Regime regime, double r) {
  cfg.validate();
  if (!(r > 0)) throw DomainError("field_asymptotic: r must be positive");
  const double Q = cfg.charge;
  const double g = cfg.gamma;
  if (regime == Regime::low_frequency) return -Q / (pi * pi * g * r * r * r);
  return -Q * g / (2.0 * pi * pi * r);
}

SelfEnergy self_energy(const ChargeConfig& cfg, SelfEnergyMethod method,
                       const numerics::QuadratureSpec& spec) {
  cfg.validate();
  const double scale = cfg.charge * cfg.charge * cfg.gamma;
  const double piecewise = 7.0 / (24.0 * std::pow(pi, 4));
  if (method == SelfEnergyMethod::asymptotic_piecewise) return {scale * piecewise, 1.0};
  // (1/8pi) int d^3r |E(0, r)|^2 in the scaled variable x = gamma r, with
  // Q = gamma = 1; the x > x_c tail uses the large-x form 1/(pi^2 x^3).
  const ChargeConfig unit{1.0, 1.0};
  const double x_c = 400.0;
  auto f = [&](double x) { return 0.5 * x * x * std::norm(field_time(unit, 0.0, x)); };
  const std::array<double, 5> pts = {0.0, 1.0, 10.0, 100.0, x_c};
  const double body = numerics::integrate_pieces(f, pts, spec).value;
  const double tail = 1.0 / (6.0 * std::pow(pi, 4) * x_c * x_c * x_c);
  const double w = body + tail;
  return {scale * w, w / piecewise};
}

complex charge_density_mixed(const ChargeConfig& cfg, double omega, double r) {
  cfg.validate();
  if (!(r > 0)) throw DomainError("charge_density_mixed: r must be positive");
  const double g = cfg.gamma;
  const double w2 = omega * omega;
  return complex(0.0, theta(-omega) * cfg.charge / std::pow(2.0 * pi, 3) * g * w2 / (w2 + g * g) *
                          std::sin(omega * r) / r);
}

complex charge_density_high_frequency_ratio(const ChargeConfig& cfg, double omega, double r) {
  const complex d = propagators::singular_mixed(propagators::MixedKind::D_minus, {omega, r});
  if (std::abs(d) == 0.0) throw DomainError("charge_density_high_frequency_ratio: D^(-) vanishes here");
  return charge_density_mixed(cfg, omega, r) / (cfg.charge * cfg.gamma * d);
}

}  // namespace nearfield::point_charge
