#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "nearfield/constants.hpp"
#include "nearfield/numerics/quadrature.hpp"

namespace nearfield::numerics {

struct FtConvention {
  int exponent_sign = -1;  // sign of i omega t in the forward kernel
  double prefactor = 1.0;  // one of 1, 1/2pi, 1/sqrt(2pi)

  void validate() const;
  // prefactor of the matching inverse transform
  double inverse_prefactor() const { return 1.0 / (2.0 * pi * prefactor); }

  static FtConvention propagator() { return {-1, 1.0}; }
  static FtConvention switching() { return {-1, 1.0 / (2.0 * pi)}; }
  static FtConvention unitary() { return {-1, 1.0 / std::sqrt(2.0 * pi)}; }
};

struct FourierOptions {
  // kinks or jumps of f; the integration is split there
  std::vector<double> breakpoints;
  // tail block length; 0 picks the half period pi/|omega|
  double block_length = 0.0;
  // cap on the automatic block length, so low frequencies still resolve f near the origin
  double max_block = 16.0;
  bool accelerate = true;
  // damping window exp(-window |t|)
  double window = 0.0;
};

namespace detail {

template <typename F>
complex fourier_integral(F& f, double omega, double kernel_sign, const QuadratureSpec& spec,
                         const FourierOptions& opts) {
  std::vector<double> pts = opts.breakpoints;
  pts.push_back(0.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const double eps = opts.window;
  auto g = [&](double t) -> complex {
    complex v = complex(f(t)) * std::exp(complex(0.0, kernel_sign * omega * t));
    if (eps > 0) v *= std::exp(-eps * std::abs(t));
    return v;
  };
  complex total = integrate_pieces(g, std::span<const double>(pts), spec).value;
  if (omega == 0.0 && opts.block_length <= 0.0) {
    total += integrate(g, pts.back(), INFINITY, spec).value;
    total += integrate(g, -INFINITY, pts.front(), spec).value;
    return total;
  }
  double block = opts.block_length > 0 ? opts.block_length : pi / std::abs(omega);
  if (spec.oscillation_frequency_hint && *spec.oscillation_frequency_hint > 0 &&
      opts.block_length <= 0) {
    block = pi / *spec.oscillation_frequency_hint;
  }
  if (opts.block_length <= 0 && opts.max_block > 0) block = std::min(block, opts.max_block);
  total += integrate_tail(g, pts.back(), +1, block, spec, opts.accelerate).value;
  total += integrate_tail(g, pts.front(), -1, block, spec, opts.accelerate).value;
  return total;
}

}  // namespace detail

// prefactor * int dt exp(exponent_sign i omega t) f(t)
template <typename F>
complex ft_numeric(F&& f, double omega, const FtConvention& conv, const QuadratureSpec& spec,
                   const FourierOptions& opts = {}) {
  conv.validate();
  return conv.prefactor * detail::fourier_integral(f, omega, double(conv.exponent_sign), spec, opts);
}

// Inverse of ft_numeric under the same convention.
template <typename F>
complex ft_inverse(F&& f, double t, const FtConvention& conv, const QuadratureSpec& spec,
                   const FourierOptions& opts = {}) {
  conv.validate();
  return conv.inverse_prefactor() *
         detail::fourier_integral(f, t, -double(conv.exponent_sign), spec, opts);
}

// Polynomial extrapolation of samples (x_i, y_i) to x = 0 (Neville).
complex extrapolate_to_zero(std::span<const double> x, std::span<const complex> y);

// Transform of a slowly decaying f: evaluated under windows exp(-eps|t|) for
// each eps and extrapolated to eps -> 0.
template <typename F>
complex ft_windowed_extrapolated(F&& f, double omega, const FtConvention& conv,
                                 const QuadratureSpec& spec, FourierOptions opts = {},
                                 std::array<double, 3> windows = {1e-2, 5e-3, 2.5e-3}) {
  std::array<complex, 3> values;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    opts.window = windows[i];
    values[i] = ft_numeric(f, omega, conv, spec, opts);
  }
  return extrapolate_to_zero(windows, values);
}

template <typename F>
complex ft_inverse_windowed_extrapolated(F&& f, double t, const FtConvention& conv,
                                         const QuadratureSpec& spec, FourierOptions opts = {},
                                         std::array<double, 3> windows = {1e-2, 5e-3, 2.5e-3}) {
  std::array<complex, 3> values;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    opts.window = windows[i];
    values[i] = ft_inverse(f, t, conv, spec, opts);
  }
  return extrapolate_to_zero(windows, values);
}

}  // namespace nearfield::numerics
