#pragma once

#include <span>
#include <utility>

namespace nearfield::numerics {

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  int sample_count = 0;
};

// Least squares fit of ln y = slope ln x + intercept.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> samples);

}  // namespace nearfield::numerics
