#pragma once

#include "nearfield/numerics/quadrature.hpp"

namespace nearfield::interactions {

struct AtomModel {
  double omega0 = 1.0;
  double linewidth = 0.01;
  double dipole = 1.0;

  void validate() const;
  // |d|^2 = f / (2 omega0) with e = m = 1
  static AtomModel from_oscillator_strength(double omega0, double linewidth, double f);
};

// d^2 [1/(w0 - w - i G) + 1/(w0 + w - i G)]; complex w allowed.
complex polarizability(const AtomModel& atom, complex omega);

// exp(i |w| R) / (4 pi R)
complex causal_propagator(double omega, double R);

enum class PropagatorBlocks { near_field, full };
enum class ResonantContraction { full_polarizability, real_part_of_alpha };

struct PotentialResult {
  double value = 0.0;
  double imaginary_residue = 0.0;
  bool regime_warning = false;
};

PotentialResult nonresonant_potential(const AtomModel& a1, const AtomModel& a2, double R,
                                      PropagatorBlocks blocks = PropagatorBlocks::near_field,
                                      const numerics::QuadratureSpec& spec = {1e-300, 1e-11, 4000, {}});

PotentialResult resonant_potential(
    const AtomModel& atom, double R,
    ResonantContraction contraction = ResonantContraction::full_polarizability,
    const numerics::QuadratureSpec& spec = {1e-300, 1e-11, 4000, {}});

// Gamma / (2 [(w0 - w)^2 + Gamma^2/4])
double scattering_duration(const AtomModel& atom, double omega);

enum class TauTreatment { lorentzian_quadrature, exact_delta };

struct TransferProbability {
  double rate = 0.0;
  double forster_radius = 0.0;
  bool regime_warning = false;
};

TransferProbability transfer_probability(const AtomModel& a1, const AtomModel& a2, double R,
                                         TauTreatment tau = TauTreatment::lorentzian_quadrature);

struct TransferSplit {
  double subluminal = 0.0;
  double superluminal = 0.0;
};

TransferSplit transfer_split(double R, double T);

}  // namespace nearfield::interactions
