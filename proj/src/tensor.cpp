#include "nearfield/tensor.hpp"

#include <cmath>

#include "nearfield/errors.hpp"

namespace nearfield::propagators {

namespace {

void require_unit(const Eigen::Vector3d& e) {
  if (!(std::abs(e.norm() - 1.0) <= 1e-12)) throw DomainError("tensor: direction e must have unit norm");
}

TensorBlock make_block(Region region, const Eigen::Vector3d& e, const Eigen::Matrix3cd& values) {
  TensorBlock b;
  b.region = region;
  b.e = e;
  b.values = values;
  return b;
}

}  // namespace

const char* region_name(Region r) {
  switch (r) {
    case Region::FF: return "FF";
    case Region::IF: return "IF";
    case Region::NF: return "NF";
  }
  return "?";
}

Eigen::Matrix3d dipole_projector(const Eigen::Vector3d& e) {
  return Eigen::Matrix3d::Identity() - 3.0 * e * e.transpose();
}

Eigen::Matrix3d far_field_projector(const Eigen::Vector3d& e) {
  return Eigen::Matrix3d::Identity() + e * e.transpose();
}

Eigen::Matrix3d transverse_projector(const Eigen::Vector3d& k_vec) {
  const double k2 = k_vec.squaredNorm();
  if (!(k2 > 0)) throw DomainError("transverse_projector: k must be nonzero");
  return Eigen::Matrix3d::Identity() - k_vec * k_vec.transpose() / k2;
}

TensorBlock tensor_decompose(Region which, SpacetimePoint p, const Eigen::Vector3d& e,
                             SignConvention sign) {
  require_unit(e);
  if (!(p.r > 0)) throw DomainError("tensor_decompose: r must be positive");
  const Eigen::Matrix3cd P = dipole_projector(e).cast<complex>();
  switch (which) {
    case Region::FF: {
      // D(t, r) = (delta(t - r) - delta(t + r)) / (4 pi r); zero off the cone
      TensorBlock b = make_block(Region::FF, e, Eigen::Matrix3cd::Zero());
      b.delta = DeltaSupport{"delta(t-r) - delta(t+r)", far_field_projector(e).cast<complex>(),
                             1.0 / (4.0 * pi * p.r), std::abs(p.t) == p.r};
      return b;
    }
    case Region::IF:
      return make_block(Region::IF, e, P * (theta(p.r * p.r - p.t * p.t) / (4.0 * pi * p.r)));
    case Region::NF:
      return make_block(Region::NF, e, P * (schwinger_dn(p.t, p.r, sign) / (p.r * p.r)));
  }
  throw DomainError("tensor_decompose: unknown region");
}

std::array<TensorBlock, 3> tensor_decompose_all(SpacetimePoint p, const Eigen::Vector3d& e,
                                                SignConvention sign) {
  return {tensor_decompose(Region::FF, p, e, sign), tensor_decompose(Region::IF, p, e, sign),
          tensor_decompose(Region::NF, p, e, sign)};
}

TensorBlock tensor_decompose(Region which, MixedPoint p, const Eigen::Vector3d& e) {
  require_unit(e);
  if (!(p.r > 0)) throw DomainError("tensor_decompose: r must be positive");
  const complex d = singular_mixed(MixedKind::D, p);
  const double wr = p.omega * p.r;
  const Eigen::Matrix3cd P = dipole_projector(e).cast<complex>();
  switch (which) {
    case Region::FF:
      return make_block(Region::FF, e, far_field_projector(e).cast<complex>() * d);
    case Region::IF: {
      if (wr == 0.0) throw PoleError("tensor_decompose: IF block has a pole at omega r = 0");
      const double s = std::sin(wr);
      if (std::abs(s) < 1e-14) throw PoleError("tensor_decompose: cot pole at omega r = n pi");
      const complex factor = -I / wr * (std::cos(wr) / s);
      return make_block(Region::IF, e, P * (factor * d));
    }
    case Region::NF:
      if (wr == 0.0) throw PoleError("tensor_decompose: NF block has a pole at omega r = 0");
      return make_block(Region::NF, e, P * (d / (wr * wr)));
  }
  throw DomainError("tensor_decompose: unknown region");
}

std::array<TensorBlock, 3> tensor_decompose_all(MixedPoint p, const Eigen::Vector3d& e) {
  return {tensor_decompose(Region::FF, p, e), tensor_decompose(Region::IF, p, e),
          tensor_decompose(Region::NF, p, e)};
}

TensorBlock tensor_momentum(Region which, SpectralPoint p, const Eigen::Vector3d& e) {
  require_unit(e);
  if (!(p.k > 0)) throw DomainError("tensor_momentum: k must be positive");
  const Eigen::Matrix3cd P = dipole_projector(e).cast<complex>();
  switch (which) {
    case Region::FF: {
      TensorBlock b = make_block(Region::FF, e, Eigen::Matrix3cd::Zero());
      const complex w = 2.0 / (std::pow(2.0 * pi, 3) * I) * sgn(p.omega);
      b.delta = DeltaSupport{"omega^2 = k^2", far_field_projector(e).cast<complex>() * w,
                             1.0 / (2.0 * p.k), std::abs(p.omega) == p.k};
      return b;
    }
    case Region::IF: {
      if (p.omega == 0.0) throw PoleError("tensor_momentum: IF block has a pole at omega = 0");
      const double step = theta(p.k * p.k - p.omega * p.omega);
      return make_block(Region::IF, e, P * (step / (8.0 * pi * I * p.omega * p.k)));
    }
    case Region::NF:
      return make_block(Region::NF, e, P * singular_momentum_nf(p));
  }
  throw DomainError("tensor_momentum: unknown region");
}

CoulombGaugePropagator coulomb_gauge_momentum(double omega, const Eigen::Vector3d& k_vec) {
  const double k = k_vec.norm();
  if (!(k > 0)) throw DomainError("coulomb_gauge_momentum: k must be positive");
  CoulombGaugePropagator out;
  out.spatial.region = Region::FF;
  out.spatial.e = k_vec / k;
  out.spatial.values = Eigen::Matrix3cd::Zero();
  const complex w = 2.0 / (std::pow(2.0 * pi, 3) * I) * sgn(omega);
  out.spatial.delta = DeltaSupport{"omega^2 = k^2", transverse_projector(k_vec).cast<complex>() * w,
                                   1.0 / (2.0 * k), std::abs(omega) == k};
  out.d00 = -1.0 / (k * k);
  out.d0i = Eigen::Vector3cd::Zero();
  return out;
}

}  // namespace nearfield::propagators
