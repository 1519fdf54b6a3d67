#pragma once

#include <Eigen/Dense>
#include <functional>
#include <variant>
#include <vector>

#include "nearfield/numerics/quadrature.hpp"
#include "nearfield/propagators.hpp"
#include "nearfield/tensor.hpp"

namespace nearfield::engine {

enum class LightConePrescription { principal_value, minus_i0 };

// fourier_consistent is the radial transform of kernel_mixed; printed keeps
// the {4/(k^2 - w^2) - (1/wk) ln} bracket.
enum class KernelForm { fourier_consistent, printed };

// d/dr (sin(w r)/r), series near w r = 0.
double radial_derivative_sinc(double omega, double r);

complex kernel_mixed(double omega, double r);
complex kernel_momentum(double omega, double k,
                        LightConePrescription prescription = LightConePrescription::principal_value,
                        KernelForm form = KernelForm::fourier_consistent);

// Current amplitude a(w) concentrated at the origin.
struct PointCurrent {
  std::function<complex(double)> amplitude;
};

// J(w, r) given in closed form, zero for r > support_radius.
struct RadialCurrent {
  std::function<complex(double, double)> density;
  double support_radius = 1.0;
};

// J(w, r) = spectrum(w) * profile(r), profile linearly interpolated between
// samples. The grid has to start at r = 0 and end where the profile vanishes.
struct GridCurrent {
  std::vector<double> radii;
  std::vector<complex> profile;
  std::function<complex(double)> spectrum;
};

class GeneralizedCurrent {
 public:
  enum class Representation { closed_form, radial_grid };
  using Component = std::variant<PointCurrent, RadialCurrent, GridCurrent>;

  GeneralizedCurrent() = default;
  static GeneralizedCurrent point_source(std::function<complex(double)> amplitude);
  static GeneralizedCurrent radial(std::function<complex(double, double)> density,
                                   double support_radius);
  static GeneralizedCurrent radial_grid(std::vector<double> radii, std::vector<complex> profile,
                                        std::function<complex(double)> spectrum = nullptr);

  Representation representation() const;
  bool empty() const { return terms_.empty(); }

  GeneralizedCurrent& operator+=(const GeneralizedCurrent& other);
  GeneralizedCurrent& operator*=(complex c);

  struct Term {
    complex coefficient;
    Component component;
  };
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

GeneralizedCurrent operator+(GeneralizedCurrent a, const GeneralizedCurrent& b);
GeneralizedCurrent operator*(complex c, GeneralizedCurrent a);

// Radial near-field strength K (x) J at (w, r).
complex field_from_current(const GeneralizedCurrent& J, propagators::MixedPoint p,
                           const numerics::QuadratureSpec& spec = {1e-15, 1e-12, 4000, {}});

// Effective charge density (1/4pi) d_t D^(-) (x) J at (w, r).
complex charge_density_from_current(const GeneralizedCurrent& J, propagators::MixedPoint p,
                                    const numerics::QuadratureSpec& spec = {1e-15, 1e-12, 4000, {}});

// (1/4 pi i)(d_i d_j - delta_ij d_t^2) D_N for |t| < r.
propagators::TensorBlock commutator_ee(double t, const Eigen::Vector3d& r_vec);
// (1/4 pi i) d_t d_j D_N for |t| < r.
Eigen::Vector3cd commutator_eh(double t, const Eigen::Vector3d& r_vec);

}  // namespace nearfield::engine
