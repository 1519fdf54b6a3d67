#pragma once

#include <complex>
#include <numbers>

namespace nearfield {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr complex I{0.0, 1.0};

// Step function with theta(0) = 1/2.
inline double theta(double x) { return x > 0 ? 1.0 : (x < 0 ? 0.0 : 0.5); }
inline double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

}  // namespace nearfield
