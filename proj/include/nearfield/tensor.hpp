#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>

#include "nearfield/propagators.hpp"

namespace nearfield::propagators {

enum class Region { FF, IF, NF };

const char* region_name(Region r);

// Distributional part of a block: weight * delta(support) * residue.
struct DeltaSupport {
  std::string support;
  Eigen::Matrix3cd weight;
  double residue = 0.0;
  bool on_support = false;
};

struct TensorBlock {
  Eigen::Matrix3cd values = Eigen::Matrix3cd::Zero();
  Region region = Region::NF;
  Eigen::Vector3d e = Eigen::Vector3d::UnitZ();
  std::optional<DeltaSupport> delta;
};

// P_ij = delta_ij - 3 e_i e_j
Eigen::Matrix3d dipole_projector(const Eigen::Vector3d& e);
// delta_ij + e_i e_j
Eigen::Matrix3d far_field_projector(const Eigen::Vector3d& e);
// delta_ij - k_i k_j / k^2
Eigen::Matrix3d transverse_projector(const Eigen::Vector3d& k_vec);

TensorBlock tensor_decompose(Region which, SpacetimePoint p, const Eigen::Vector3d& e,
                             SignConvention sign = SignConvention::canonical);
std::array<TensorBlock, 3> tensor_decompose_all(SpacetimePoint p, const Eigen::Vector3d& e,
                                                SignConvention sign = SignConvention::canonical);

TensorBlock tensor_decompose(Region which, MixedPoint p, const Eigen::Vector3d& e);
std::array<TensorBlock, 3> tensor_decompose_all(MixedPoint p, const Eigen::Vector3d& e);

TensorBlock tensor_momentum(Region which, SpectralPoint p, const Eigen::Vector3d& e);

struct CoulombGaugePropagator {
  TensorBlock spatial;  // transverse projector times the on-shell scalar D(omega, k)
  complex d00;
  Eigen::Vector3cd d0i;
};

CoulombGaugePropagator coulomb_gauge_momentum(double omega, const Eigen::Vector3d& k_vec);

}  // namespace nearfield::propagators
