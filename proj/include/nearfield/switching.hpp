#pragma once

#include <string>
#include <vector>

#include "nearfield/numerics/fourier.hpp"

namespace nearfield::switching {

enum class TemporalForm { g1, g2, g3, g1_two_level };
enum class SpatialForm { g1, g2 };

struct SwitchingSpec {
  TemporalForm form = TemporalForm::g1;
  double gamma = 1.0;
  double omega0 = 0.0;  // two-level form only

  void validate() const;
};

struct SpatialSwitchingSpec {
  SpatialForm form = SpatialForm::g1;
  double kappa = 1.0;

  void validate() const;
};

// Transform convention reproducing the frequency images below.
inline numerics::FtConvention convention() { return numerics::FtConvention::switching(); }

double fis_time(const SwitchingSpec& spec, double t);
double fis_freq(const SwitchingSpec& spec, double omega);
double fis_spatial(const SpatialSwitchingSpec& spec, double z);

enum class AlterationRegime { reflection, refraction };

struct MomentumAlteration {
  double delta_kz = 0.0;
  double delta_z = 0.0;
  AlterationRegime regime = AlterationRegime::refraction;
  double refraction_angle = 0.0;  // NaN in the reflection regime
};

MomentumAlteration momentum_alteration(double n1, double n2, double omega, double phi);

double fis_ftir(double z, double omega, double n, double phi, SpatialForm form);

struct Preset {
  std::string name;
  std::string description;
  double value_si;  // s^-1
};

// Named switching rates: classical-radius and Compton based.
const std::vector<Preset>& presets();

}  // namespace nearfield::switching
