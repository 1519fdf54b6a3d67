#pragma once

#include <functional>

#include "nearfield/numerics/quadrature.hpp"

namespace nearfield::numerics {

enum class DistributionId { D, D_N, ddt_D_N };

struct TestFunction {
  std::function<double(double)> value;
  std::function<double(double)> first_derivative;
  std::function<double(double)> second_derivative;
};

// Gaussian packet a t^m exp(-(t - c)^2 / w^2) style helpers used by tests and
// the verify suite: phi(t) = (p0 + p1 t) exp(-((t - c)/w)^2).
TestFunction gaussian_packet(double p0, double p1, double c, double w);

// <distribution(., r), phi>. D uses the delta formula; D_N and ddt_D_N use
// quadrature split at t = +-r.
double pair_with_test_function(DistributionId id, double r, const TestFunction& phi,
                               const QuadratureSpec& spec = {});

// int phi''(t) D_N(t, r) dt, the left side of the d^2/dt^2 D_N = D identity.
double pair_second_derivative_with_dn(double r, const TestFunction& phi,
                                      const QuadratureSpec& spec = {});

}  // namespace nearfield::numerics
