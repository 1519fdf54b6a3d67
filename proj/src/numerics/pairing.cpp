#include "nearfield/numerics/pairing.hpp"

#include <array>
#include <cmath>

#include "nearfield/propagators.hpp"

namespace nearfield::numerics {

TestFunction gaussian_packet(double p0, double p1, double c, double w) {
  if (!(w > 0)) throw DomainError("gaussian_packet: width must be positive");
  // phi = P(t) G(t), G = exp(-u^2), u = (t - c)/w, G' = -2u/w G
  auto g = [c, w](double t) { const double u = (t - c) / w; return std::exp(-u * u); };
  TestFunction f;
  f.value = [=](double t) { return (p0 + p1 * t) * g(t); };
  f.first_derivative = [=](double t) {
    const double u = (t - c) / w;
    return (p1 - (p0 + p1 * t) * 2.0 * u / w) * g(t);
  };
  f.second_derivative = [=](double t) {
    const double u = (t - c) / w;
    const double poly = p0 + p1 * t;
    // (P G)'' = P'' G + 2 P' G' + P G''; G'' = (4u^2 - 2)/w^2 G
    return (-4.0 * p1 * u / w + poly * (4.0 * u * u - 2.0) / (w * w)) * g(t);
  };
  return f;
}

namespace {

double pair_with_dn(double r, const std::function<double(double)>& h, const QuadratureSpec& spec) {
  auto integrand = [&](double t) { return h(t) * propagators::schwinger_dn(t, r); };
  const std::array<double, 4> pts = {-INFINITY, -r, r, INFINITY};
  return integrate_pieces(integrand, pts, spec).value;
}

}  // namespace

double pair_with_test_function(DistributionId id, double r, const TestFunction& phi,
                               const QuadratureSpec& spec) {
  if (!(r > 0)) throw DomainError("pair_with_test_function: r must be positive");
  switch (id) {
    case DistributionId::D:
      return (phi.value(r) - phi.value(-r)) / (4.0 * pi * r);
    case DistributionId::D_N:
      return pair_with_dn(r, phi.value, spec);
    case DistributionId::ddt_D_N:
      return -pair_with_dn(r, phi.first_derivative, spec);
  }
  throw DomainError("pair_with_test_function: unknown distribution");
}

double pair_second_derivative_with_dn(double r, const TestFunction& phi, const QuadratureSpec& spec) {
  if (!(r > 0)) throw DomainError("pair_second_derivative_with_dn: r must be positive");
  return pair_with_dn(r, phi.second_derivative, spec);
}

}  // namespace nearfield::numerics
