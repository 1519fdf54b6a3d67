#include "nearfield/numerics/special_functions.hpp"

#include <cmath>
#include <limits>

#include "nearfield/errors.hpp"

namespace nearfield::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoOverSqrtPi = 1.1283791670955125739;
constexpr double kMaxShiArg = 700.0;

complex erf_series(complex z) {
  // erf z = 2/sqrt(pi) sum (-1)^k z^(2k+1) / (k! (2k+1))
  const complex z2 = z * z;
  complex term = z;  // (-1)^k z^(2k+1)/k!
  complex sum = z;
  for (int k = 1; k < 4000; ++k) {
    term *= -z2 / double(k);
    const complex add = term / double(2 * k + 1);
    sum += add;
    if (std::abs(add) <= kEps * 0.25 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// erfc(z) for Re z > 0 via the Laplace continued fraction
// erfc z = exp(-z^2)/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))).
complex erfc_continued_fraction(complex z) {
  const double tiny = 1e-300;
  complex f = z;
  complex c = z;
  complex d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double a = 0.5 * n;
    d = z + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = z + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const complex delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 2 * kEps) break;
  }
  return std::exp(-z * z) / (std::sqrt(pi) * f);
}

}  // namespace

complex erf_complex(complex z) {
  if (z.real() < 0) return -erf_complex(-z);
  const double x = z.real();
  const double y = z.imag();
  if (y * y - x * x > 700.0) throw OverflowError("erf_complex: result exceeds double range");
  // Close to the imaginary axis the Maclaurin terms share a phase, so the
  // series stays accurate even where |erf| grows like exp(y^2).
  if (std::abs(z) <= 2.5 || x <= 0.5) return erf_series(z);
  return 1.0 - erfc_continued_fraction(z);
}

double erfi(double x) { return (-I * erf_complex(complex(0.0, x))).real(); }

double shi(double x) {
  if (std::abs(x) > kMaxShiArg) throw OverflowError("shi: |x| beyond representable range");
  if (x == 0) return 0.0;
  // sum x^(2k+1) / ((2k+1) (2k+1)!)
  double p = x;  // x^(2k+1)/(2k+1)!
  double sum = x;
  for (int k = 1; k < 2000; ++k) {
    p *= x * x / (double(2 * k) * double(2 * k + 1));
    const double add = p / double(2 * k + 1);
    sum += add;
    if (std::abs(add) <= kEps * 0.25 * std::abs(sum)) break;
  }
  return sum;
}

double chi(double x) {
  if (x == 0) throw DomainError("chi: logarithmic singularity at x = 0");
  if (std::abs(x) > kMaxShiArg) throw OverflowError("chi: |x| beyond representable range");
  // gamma + ln|x| + sum x^(2k) / (2k (2k)!)
  double p = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 2000; ++k) {
    p *= x * x / (double(2 * k - 1) * double(2 * k));
    const double add = p / double(2 * k);
    sum += add;
    if (add <= kEps * 0.25 * std::abs(sum)) break;
  }
  return euler_gamma + std::log(std::abs(x)) + sum;
}

HyperbolicIntegrals hyperbolic_integrals(double x) { return {shi(x), chi(x)}; }

double expint_ei_scaled(double x) {
  if (!(x > 0)) throw DomainError("expint_ei_scaled: x must be positive");
  if (x <= 40.0) {
    // Ei x = gamma + ln x + sum x^k/(k k!)
    double p = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 500; ++k) {
      p *= x / double(k);
      const double add = p / double(k);
      sum += add;
      if (add <= kEps * 0.25 * sum) break;
    }
    return std::exp(-x) * (euler_gamma + std::log(x) + sum);
  }
  // asymptotic: e^-x Ei x ~ (1/x) sum k!/x^k, truncated at the smallest term
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double next = term * double(k) / x;
    if (next > term) break;
    term = next;
    sum += term;
    if (term <= kEps * 0.25 * sum) break;
  }
  return sum / x;
}

double expint_e1_scaled(double x) {
  if (!(x > 0)) throw DomainError("expint_e1_scaled: x must be positive");
  if (x <= 1.0) {
    // E1 x = -gamma - ln x - sum (-x)^k/(k k!)
    double p = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      p *= -x / double(k);
      const double add = p / double(k);
      sum += add;
      if (std::abs(add) <= kEps * 0.25 * std::abs(sum)) break;
    }
    return std::exp(x) * (-euler_gamma - std::log(x) - sum);
  }
  // continued fraction, modified Lentz
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -double(i) * double(i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 2 * kEps) break;
  }
  return h;
}

}  // namespace nearfield::numerics
