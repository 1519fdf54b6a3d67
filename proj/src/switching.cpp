#include "nearfield/switching.hpp"

#include <cmath>
#include <limits>

#include "nearfield/errors.hpp"

namespace nearfield::switching {

void SwitchingSpec::validate() const {
  if (!(gamma > 0)) throw DomainError("SwitchingSpec: gamma must be positive");
  if (!(omega0 >= 0)) throw DomainError("SwitchingSpec: omega0 must be non-negative");
}

void SpatialSwitchingSpec::validate() const {
  if (!(kappa > 0)) throw DomainError("SpatialSwitchingSpec: kappa must be positive");
}

double fis_time(const SwitchingSpec& spec, double t) {
  spec.validate();
  const double g = spec.gamma;
  switch (spec.form) {
    case TemporalForm::g1:
      return std::exp(-g * std::abs(t));
    case TemporalForm::g2:
    case TemporalForm::g3:  // interval form reduced to r = 0
      return std::exp(-g * g * t * t);
    case TemporalForm::g1_two_level:
      return std::exp(-g * std::abs(t)) * std::cos(spec.omega0 * t);
  }
  throw DomainError("fis_time: unknown form");
}

double fis_freq(const SwitchingSpec& spec, double omega) {
  spec.validate();
  const double g = spec.gamma;
  auto lorentz = [g](double w) { return g / (pi * (w * w + g * g)); };
  switch (spec.form) {
    case TemporalForm::g1:
      return lorentz(omega);
    case TemporalForm::g2:
    case TemporalForm::g3:
      return std::exp(-omega * omega / (4.0 * g * g)) / (2.0 * g * std::sqrt(pi));
    case TemporalForm::g1_two_level:
      return 0.5 * (lorentz(omega - spec.omega0) + lorentz(omega + spec.omega0));
  }
  throw DomainError("fis_freq: unknown form");
}

double fis_spatial(const SpatialSwitchingSpec& spec, double z) {
  spec.validate();
  const double k = spec.kappa;
  switch (spec.form) {
    case SpatialForm::g1:
      return std::exp(-k * std::abs(z));
    case SpatialForm::g2:
      return std::exp(-k * k * z * z);
  }
  throw DomainError("fis_spatial: unknown form");
}

MomentumAlteration momentum_alteration(double n1, double n2, double omega, double phi) {
  if (!(n1 >= 1) || !(n2 >= 1)) throw DomainError("momentum_alteration: indices must be >= 1");
  if (!(omega > 0)) throw DomainError("momentum_alteration: omega must be positive");
  if (!(phi >= 0) || !(phi < pi / 2)) throw DomainError("momentum_alteration: need 0 <= phi < pi/2");
  MomentumAlteration out;
  const bool can_reflect = n1 > n2;
  const double phi_crit = can_reflect ? std::asin(n2 / n1) : pi / 2;
  if (can_reflect && phi > phi_crit) {
    out.regime = AlterationRegime::reflection;
    out.delta_kz = 2.0 * omega * n1 * std::cos(phi);
    out.refraction_angle = std::numeric_limits<double>::quiet_NaN();
  } else {
    out.regime = AlterationRegime::refraction;
    const double s = std::min(1.0, n1 * std::sin(phi) / n2);
    const double phi_t = std::asin(s);
    out.refraction_angle = phi_t;
    out.delta_kz = omega * std::abs(n1 * std::cos(phi) - n2 * std::cos(phi_t));
  }
  if (!(out.delta_kz > 1e-300)) throw DomainError("momentum_alteration: vanishing momentum transfer");
  out.delta_z = 1.0 / (2.0 * out.delta_kz);
  return out;
}

double fis_ftir(double z, double omega, double n, double phi, SpatialForm form) {
  if (!(phi < pi / 2)) throw DomainError("fis_ftir: requires phi < pi/2");
  const double a = 4.0 * n * omega * z * std::cos(phi);
  switch (form) {
    case SpatialForm::g1:
      return std::exp(-std::abs(a));
    case SpatialForm::g2:
      return std::exp(-a * a);
  }
  throw DomainError("fis_ftir: unknown form");
}

const std::vector<Preset>& presets() {
  // c / r0 with r0 the classical electron radius; m c^2 / hbar.
  static const std::vector<Preset> table = {
      {"gamma_classical", "m c^3 / e^2 = c / r0", 299792458.0 / 2.8179403262e-15},
      {"gamma_compton", "m c^2 / hbar", 299792458.0 / 3.8615926796e-13},
  };
  return table;
}

}  // namespace nearfield::switching
