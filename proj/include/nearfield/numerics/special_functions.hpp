#pragma once

#include "nearfield/constants.hpp"

namespace nearfield::numerics {

// Error function of a complex argument. Throws OverflowError when
// exp(y^2 - x^2) leaves the double range.
complex erf_complex(complex z);

// Imaginary error function erfi(x) = -i erf(ix).
double erfi(double x);

struct HyperbolicIntegrals {
  double shi;
  double chi;
};

// Shi(x) and Chi(x). chi needs x != 0; |x| must stay below 700.
HyperbolicIntegrals hyperbolic_integrals(double x);
double shi(double x);
double chi(double x);

// exp(-x) Ei(x) and exp(x) E1(x) for x > 0.
double expint_ei_scaled(double x);
double expint_e1_scaled(double x);

}  // namespace nearfield::numerics
