#include <cmath>

#include "nearfield/numerics/fourier.hpp"
#include "nearfield/numerics/quadrature.hpp"

namespace nearfield::numerics {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0) || !(rel_tol > 0)) throw DomainError("QuadratureSpec: tolerances must be positive");
  if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
  if (oscillation_frequency_hint && !(*oscillation_frequency_hint >= 0))
    throw DomainError("QuadratureSpec: oscillation_frequency_hint must be non-negative");
}

void FtConvention::validate() const {
  if (exponent_sign != 1 && exponent_sign != -1)
    throw DomainError("FtConvention: exponent_sign must be +1 or -1");
  const double allowed[] = {1.0, 1.0 / (2.0 * pi), 1.0 / std::sqrt(2.0 * pi)};
  for (double a : allowed)
    if (std::abs(prefactor - a) <= 1e-15) return;
  throw DomainError("FtConvention: prefactor must be 1, 1/2pi or 1/sqrt(2pi)");
}

complex extrapolate_to_zero(std::span<const double> x, std::span<const complex> y) {
  if (x.size() != y.size() || x.empty()) throw DomainError("extrapolate_to_zero: size mismatch");
  std::vector<complex> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      const double xi = x[i];
      const double xj = x[i + m];
      if (xi == xj) throw DomainError("extrapolate_to_zero: repeated abscissa");
      p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
    }
  }
  return p[0];
}

}  // namespace nearfield::numerics
