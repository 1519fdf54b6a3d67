#pragma once

#include "nearfield/engine.hpp"
#include "nearfield/numerics/quadrature.hpp"

namespace nearfield::point_charge {

struct ChargeConfig {
  double charge = 1.0;
  double gamma = 1.0;

  void validate() const;
};

// -gamma Q sgn(t) exp(-gamma |t|); the delta(r) factor is implicit.
double current_time(const ChargeConfig& cfg, double t);
// i gamma Q w / (pi (w^2 + gamma^2))
complex current_freq(const ChargeConfig& cfg, double omega);

// Point-source current usable with engine::field_from_current.
engine::GeneralizedCurrent as_current(const ChargeConfig& cfg);

complex field_mixed(const ChargeConfig& cfg, double omega, double r);

complex field_momentum(
    const ChargeConfig& cfg, double omega, double k,
    engine::LightConePrescription prescription = engine::LightConePrescription::principal_value,
    engine::KernelForm form = engine::KernelForm::fourier_consistent);

// derived: inverse transform of field_mixed with kernel exp(+i w t).
// printed: prefactor 2Q/(2pi)^3 and +2(chi sh - shi ch) in the bracket.
enum class TimeFieldForm { derived, printed };

complex field_time(const ChargeConfig& cfg, double t, double r,
                   TimeFieldForm form = TimeFieldForm::derived);

// chi(|x|) sinh x - shi(x) cosh x, evaluated without exp(2|x|) cancellation.
double hyperbolic_combination(double x);

enum class Regime { low_frequency, high_frequency };
double field_asymptotic(const ChargeConfig& cfg, Regime regime, double r);

enum class SelfEnergyMethod { asymptotic_piecewise, full_numeric };

struct SelfEnergy {
  double value = 0.0;
  double ratio_to_asymptotic = 1.0;
};

SelfEnergy self_energy(const ChargeConfig& cfg, SelfEnergyMethod method,
                       const numerics::QuadratureSpec& spec = {1e-14, 1e-10, 4000, {}});

complex charge_density_mixed(const ChargeConfig& cfg, double omega, double r);
// charge_density_mixed / (Q gamma D^(-)(w, r)); diagnostic only.
complex charge_density_high_frequency_ratio(const ChargeConfig& cfg, double omega, double r);

}  // namespace nearfield::point_charge
