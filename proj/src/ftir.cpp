#include "nearfield/ftir.hpp"

#include <cmath>

#include "nearfield/engine.hpp"
#include "nearfield/errors.hpp"
#include "nearfield/numerics/special_functions.hpp"
#include "nearfield/propagators.hpp"

namespace nearfield::ftir {

void FtirConfig::validate() const {
  if (!(n1 >= 1) || !(n2 >= 1)) throw DomainError("FtirConfig: refractive indices must be >= 1");
  if (!(omega > 0)) throw DomainError("FtirConfig: omega must be positive");
  if (!(phi >= 0) || !(phi < pi / 2)) throw DomainError("FtirConfig: need 0 <= phi < pi/2");
  if (!(alpha >= 0)) throw DomainError("FtirConfig: alpha must be non-negative");
  if (!std::isfinite(e0)) throw DomainError("FtirConfig: E0 must be finite");
}

double FtirConfig::critical_angle() const {
  if (!(n1 > n2)) return pi / 2;
  return std::asin(n2 / n1);
}

bool FtirConfig::total_reflection() const { return n1 > n2 && phi > critical_angle(); }

double refraction_profile(const FtirConfig& cfg, double z) {
  const double n = cfg.relative_index();
  return n * theta(-z) + theta(z);
}

LayerGeometry layer_geometry(const FtirConfig& cfg) {
  cfg.validate();
  const double c = std::cos(cfg.phi);
  if (!(c > 1e-12)) throw DomainError("layer_geometry: grazing incidence");
  LayerGeometry g;
  g.dz_medium = 1.0 / (4.0 * cfg.n1 * cfg.omega * c);
  g.dz_vacuum = 1.0 / (4.0 * cfg.n2 * cfg.omega * c);
  g.xi = g.dz_medium;
  return g;
}

double smoothed_delta(double z, double xi) {
  if (!(xi > 0)) throw DomainError("smoothed_delta: xi must be positive");
  return std::exp(-z * z / (xi * xi)) / (xi * std::sqrt(pi));
}

double smoothed_delta_derivative(double z, double xi) {
  return -2.0 * z / (xi * xi) * smoothed_delta(z, xi);
}

complex current_factor(double q, double dz) {
  if (!(dz > 0)) throw DomainError("current_factor: dz must be positive");
  const double a = q * dz / std::sqrt(8.0);
  const complex erf_term = numerics::erf_complex(complex(0.0, -a));
  return dz * std::sqrt(pi / 8.0) * std::exp(-a * a) * (1.0 - erf_term);
}

complex layer_braces(const FtirConfig& cfg, double q) {
  const LayerGeometry g = layer_geometry(cfg);
  const double n = cfg.relative_index();
  const double dz = g.dz_medium;
  return (current_factor(-q, dz) + std::pow(n, -4) * current_factor(q, n * dz)) / (dz * dz * dz);
}

complex field_k(const FtirConfig& cfg, double t, double k, double q) {
  cfg.validate();
  if (!(k > 0) || !(k >= std::abs(q))) throw DomainError("field_k: need k > 0 and k >= |q|");
  // the incident exp(i w t) wave sits at spectral frequency -w, where the
  // theta(-w) gate of D_N^(-) is open
  const double w = cfg.omega;
  const complex dn_minus = theta(w) * propagators::singular_momentum_nf({-w, k});
  const complex phase = std::exp(complex(0.0, -w * t));
  return 2.0 / std::sqrt(pi) * w * phase * cfg.alpha * std::abs(cfg.e0) * k * layer_braces(cfg, q) *
         dn_minus;
}

double field_k_small_q(const FtirConfig& cfg, double q) {
  const LayerGeometry g = layer_geometry(cfg);
  const double n = cfg.relative_index();
  const double dz = g.dz_medium;
  const double x2 = q * q * dz * dz / 8.0;
  return std::sqrt(pi / 8.0) / (dz * dz) * (std::exp(-x2) + std::pow(n, -3) * std::exp(-n * n * x2));
}

double resolution_scale(double kz, double q) {
  if (kz == q) throw DomainError("resolution_scale: degenerate k_z = q");
  return 1.0 / std::abs(kz - q);
}

Eigen::Vector3cd field_real_space(const FtirConfig& cfg, double t, double x, double y, double z,
                                  const numerics::QuadratureSpec& spec) {
  const LayerGeometry g = layer_geometry(cfg);
  const double n = cfg.relative_index();
  const double w = cfg.omega;
  const double drive = cfg.alpha * std::abs(cfg.e0);
  if (drive == 0.0) return Eigen::Vector3cd::Zero();
  // grad D_N^(-)(-w; rho) = -(1/(2 pi i w^2)) d/drho(sin(-w rho)/rho) rho_hat
  auto grad_component = [&](int comp, double zz, double s) -> complex {
    const Eigen::Vector3d rv(x, y, s - zz);
    const double rho = rv.norm();
    if (rho == 0.0) return 0.0;
    const double radial = engine::radial_derivative_sinc(-w, rho);
    return -radial * rv[comp] / rho / (complex(0.0, 2.0 * pi) * w * w);
  };
  auto term = [&](int comp, double dz, double zz) {
    auto f = [&](double s) { return std::exp(-2.0 * s * s / (dz * dz)) * grad_component(comp, zz, s); };
    return numerics::integrate(f, 0.0, INFINITY, spec).value / (dz * dz * dz);
  };
  Eigen::Vector3cd out;
  const complex pref = complex(0.0, 2.0 / std::sqrt(pi)) * w * std::exp(complex(0.0, -w * t)) * drive;
  for (int c = 0; c < 3; ++c) {
    out[c] = pref * (term(c, g.dz_medium, z) + term(c, g.dz_vacuum, -z) / n);
  }
  return out;
}

}  // namespace nearfield::ftir
