#include "nearfield/numerics/power_law.hpp"

#include <cmath>

#include "nearfield/errors.hpp"

namespace nearfield::numerics {

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> samples) {
  const std::size_t n = samples.size();
  if (n < 3) throw DomainError("fit_power_law: at least 3 samples required");
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : samples) {
    if (!(x > 0) || !(y > 0)) throw DomainError("fit_power_law: samples must be strictly positive");
    mx += std::log(x);
    my += std::log(y);
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : samples) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  if (!(sxx > 0)) throw DomainError("fit_power_law: degenerate input, all x equal");
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (const auto& [x, y] : samples) {
    const double res = std::log(y) - (fit.slope * std::log(x) + fit.intercept);
    ssr += res * res;
  }
  fit.slope_stderr = n > 2 ? std::sqrt(ssr / double(n - 2) / sxx) : 0.0;
  fit.sample_count = int(n);
  return fit;
}

}  // namespace nearfield::numerics
