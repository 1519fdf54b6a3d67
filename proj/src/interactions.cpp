#include "nearfield/interactions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "nearfield/errors.hpp"
#include "nearfield/propagators.hpp"

namespace nearfield::interactions {

using numerics::QuadratureSpec;

void AtomModel::validate() const {
  if (!(omega0 > 0)) throw DomainError("AtomModel: omega0 must be positive");
  if (!(linewidth > 0)) throw DomainError("AtomModel: linewidth must be positive");
  if (!(linewidth < omega0 / 10.0)) throw DomainError("AtomModel: requires linewidth < omega0/10");
  if (!std::isfinite(dipole)) throw DomainError("AtomModel: dipole must be finite");
}

AtomModel AtomModel::from_oscillator_strength(double omega0, double linewidth, double f) {
  if (!(f > 0)) throw DomainError("from_oscillator_strength: f must be positive");
  if (!(omega0 > 0)) throw DomainError("from_oscillator_strength: omega0 must be positive");
  AtomModel a{omega0, linewidth, std::sqrt(f / (2.0 * omega0))};
  a.validate();
  return a;
}

complex polarizability(const AtomModel& atom, complex omega) {
  const complex w0g(atom.omega0, -atom.linewidth);
  const double d2 = atom.dipole * atom.dipole;
  return d2 * (1.0 / (w0g - omega) + 1.0 / (w0g + omega));
}

complex causal_propagator(double omega, double R) {
  if (!(R > 0)) throw DomainError("causal_propagator: R must be positive");
  return std::exp(complex(0.0, std::abs(omega) * R)) / (4.0 * pi * R);
}

namespace {

// int_0^inf f(u) du with breaks at the atomic and geometric scales.
template <typename F>
complex imaginary_axis_integral(F&& f, double w0, double R, const QuadratureSpec& spec) {
  std::vector<double> pts = {0.0, w0, 10.0 * w0, 1.0 / R, 10.0 / R, 100.0 / R};
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  complex total = numerics::integrate_pieces(f, pts, spec).value;
  total += numerics::integrate(f, pts.back(), INFINITY, spec).value;
  return total;
}

// Sum_ik M_ik M_ik of the far-, intermediate- and near-field blocks continued
// to w = i u with D_c = exp(-uR)/(4 pi R), times u^4. With x = uR and
// a = i coth(x)/x - 1/x^2 the contraction is 6 - 4a + 6a^2; its real part
// cancels like 1/x^2 at small x, so a series takes over there.
double full_block_square_times_u4(double u, double R) {
  const double x = u * R;
  double h;
  if (x < 0.1) {
    const double x2 = x * x;
    h = 28.0 / 5.0 +
        x2 * (4.0 / 63.0 +
              x2 * (-2.0 / 225.0 + x2 * (4.0 / 3465.0 + x2 * (-2764.0 / 19348875.0 + x2 * 8.0 / 467775.0))));
  } else {
    const double d = x / std::tanh(x) - 1.0;
    h = 6.0 + 4.0 / (x * x) - 6.0 * d * (d + 2.0) / (x * x * x * x);
  }
  return std::pow(u, 4) * h * std::exp(-2.0 * x) / (16.0 * pi * pi * R * R);
}

}  // namespace

PotentialResult nonresonant_potential(const AtomModel& a1, const AtomModel& a2, double R,
                                      PropagatorBlocks blocks, const QuadratureSpec& spec) {
  a1.validate();
  a2.validate();
  if (!(R > 0)) throw DomainError("nonresonant_potential: R must be positive");
  const double w0 = std::max(a1.omega0, a2.omega0);
  PotentialResult out;
  out.regime_warning = w0 * R > 0.1;
  complex value;
  if (blocks == PropagatorBlocks::near_field) {
    // (i/4pi) int dw w^4 a1 a2 [P D_c/(wR)^2]^2, rotated to w = i u
    auto f = [&](double u) {
      const complex iu(0.0, u);
      return polarizability(a1, iu) * polarizability(a2, iu) * std::exp(-2.0 * u * R);
    };
    const complex integral = imaginary_axis_integral(f, w0, R, spec);
    value = -(1.0 / (2.0 * pi)) * (6.0 / (16.0 * pi * pi * std::pow(R, 6))) * integral;
  } else {
    auto f = [&](double u) {
      if (u == 0.0) return complex(0.0);
      const complex iu(0.0, u);
      return polarizability(a1, iu) * polarizability(a2, iu) * full_block_square_times_u4(u, R);
    };
    value = -(1.0 / (2.0 * pi)) * imaginary_axis_integral(f, w0, R, spec);
  }
  out.value = value.real();
  out.imaginary_residue = value.imag();
  return out;
}

PotentialResult resonant_potential(const AtomModel& atom, double R, ResonantContraction contraction,
                                   const QuadratureSpec& spec) {
  atom.validate();
  if (!(R > 0)) throw DomainError("resonant_potential: R must be positive");
  PotentialResult out;
  out.regime_warning = atom.omega0 * R > 0.1;
  const double frob = std::sqrt(6.0);
  // (i/2pi) int dw w^2 |P|_F D_c/(wR)^2 alpha = (i sqrt6/(2 pi R^2)) int D_c alpha dw
  complex value;
  if (contraction == ResonantContraction::full_polarizability) {
    auto f = [&](double u) { return polarizability(atom, complex(0.0, u)) * std::exp(-u * R); };
    const complex integral = imaginary_axis_integral(f, atom.omega0, R, spec);
    value = -(frob / (4.0 * pi * pi * R * R * R)) * integral;
  } else {
    // Re alpha = (alpha + conj alpha)/2; conj alpha has a pole at w0 + i G in
    // the first quadrant whose residue is picked up by the rotation.
    AtomModel mirrored = atom;
    mirrored.linewidth = -atom.linewidth;
    auto f = [&](double u) {
      const complex iu(0.0, u);
      return 0.5 * (polarizability(atom, iu) + polarizability(mirrored, iu)) * std::exp(-u * R);
    };
    const complex rotated = complex(0.0, 1.0) * imaginary_axis_integral(f, atom.omega0, R, spec);
    const complex z0(atom.omega0, atom.linewidth);
    const complex residue = -0.5 * complex(0.0, 2.0 * pi) * atom.dipole * atom.dipole *
                            std::exp(complex(0.0, 1.0) * z0 * R);
    const complex half_line = (rotated + residue) / (4.0 * pi * R);
    value = complex(0.0, frob / (2.0 * pi * R * R)) * 2.0 * half_line;
  }
  out.value = value.real();
  out.imaginary_residue = value.imag();
  return out;
}

double scattering_duration(const AtomModel& atom, double omega) {
  const double g = atom.linewidth;
  const double d = atom.omega0 - omega;
  return g / (2.0 * (d * d + g * g / 4.0));
}

TransferProbability transfer_probability(const AtomModel& a1, const AtomModel& a2, double R,
                                         TauTreatment tau) {
  a1.validate();
  a2.validate();
  if (!(R > 0)) throw DomainError("transfer_probability: R must be positive");
  if (a1.omega0 != a2.omega0) throw DomainError("transfer_probability: atoms must share omega0");
  const double w0 = a1.omega0;
  const double G = a1.linewidth;
  // |D_NF(w0, R)|^2 with D_c: |P|_F^2 |D_c|^2 / (w0 R)^4
  const double dc = std::abs(causal_propagator(w0, R));
  const double block2 = 6.0 * dc * dc / std::pow(w0 * R, 4);
  double weight = pi;
  if (tau == TauTreatment::lorentzian_quadrature) {
    auto f = [&](double w) { return scattering_duration(a1, w); };
    const std::array<double, 5> pts = {-INFINITY, w0 - 10 * G, w0, w0 + 10 * G, INFINITY};
    weight = numerics::integrate_pieces(f, pts, {1e-14, 1e-12, 4000, {}}).value;
  }
  const double d2 = a1.dipole * a1.dipole * a2.dipole * a2.dipole;
  TransferProbability out;
  out.rate = d2 * block2 * weight / G;
  out.forster_radius = R * std::pow(out.rate * G, 1.0 / 6.0);
  out.regime_warning = w0 * R > 0.1;
  return out;
}

TransferSplit transfer_split(double R, double T) {
  const double f = propagators::superluminal_fraction(R, T);
  return {1.0 - f, f};
}

}  // namespace nearfield::interactions
