#pragma once

#include <Eigen/Dense>

#include "nearfield/numerics/quadrature.hpp"

namespace nearfield::ftir {

struct FtirConfig {
  double n1 = 1.5;
  double n2 = 1.0;
  double phi = pi / 3;
  double omega = 1.0;
  double alpha = 1.0;
  double e0 = 1.0;

  void validate() const;
  double relative_index() const { return n1 / n2; }
  double critical_angle() const;
  bool total_reflection() const;
};

struct LayerGeometry {
  double dz_medium = 0.0;  // dz1, dense side
  double dz_vacuum = 0.0;  // dz2 = n dz1
  double xi = 0.0;         // delta smoothing width
};

// n theta(-z) + theta(z), n(0) = (n + 1)/2
double refraction_profile(const FtirConfig& cfg, double z);

LayerGeometry layer_geometry(const FtirConfig& cfg);

// Gaussian delta(z, xi) and its z-derivative.
double smoothed_delta(double z, double xi);
double smoothed_delta_derivative(double z, double xi);

// I(q, dz) = int_0^inf exp(i q s - 2 s^2/dz^2) ds
complex current_factor(double q, double dz);

// dz1^-3 {I(-q, dz1) + n^-4 I(q, n dz1)}
complex layer_braces(const FtirConfig& cfg, double q);

// Near-field amplitude in (t, k) with k = |(k_perp, q)| >= |q|.
complex field_k(const FtirConfig& cfg, double t, double k, double q);

// sqrt(pi/8) dz^-2 [exp(-q^2 dz^2/8) + n^-3 exp(-n^2 q^2 dz^2/8)]
double field_k_small_q(const FtirConfig& cfg, double q);

double resolution_scale(double kz, double q);

Eigen::Vector3cd field_real_space(const FtirConfig& cfg, double t, double x, double y, double z,
                                  const numerics::QuadratureSpec& spec = {1e-13, 1e-10, 4000, {}});

}  // namespace nearfield::ftir
