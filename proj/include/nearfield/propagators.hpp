#pragma once

#include "nearfield/constants.hpp"

namespace nearfield::propagators {

enum class TimeKind { D_N, D_N1, D_N_plus, D_N_minus };
enum class MixedKind { D, D1, D_plus, D_minus, D_N, D_N1, D_N_plus, D_N_minus };

// canonical: (|t-r| - |t+r|)/(8 pi r), which satisfies d_t^2 D_N = D.
// piecewise_printed: the opposite overall sign of the piecewise display.
enum class SignConvention { canonical, piecewise_printed };

struct SpacetimePoint {
  double t = 0.0;
  double r = 1.0;
};

struct MixedPoint {
  double omega = 0.0;
  double r = 1.0;
};

struct SpectralPoint {
  double omega = 0.0;
  double k = 1.0;
};

struct LogScale {
  double mu = 1.0;
};

double schwinger_dn(double t, double r, SignConvention sign = SignConvention::canonical);
double schwinger_dn1(double t, double r, LogScale scale = {});

complex singular_time(TimeKind kind, SpacetimePoint p, LogScale scale = {},
                      SignConvention sign = SignConvention::canonical);
complex singular_mixed(MixedKind kind, MixedPoint p);

// Scalar factor of the near-field block in (omega, k).
complex singular_momentum_nf(SpectralPoint p);

// |D|^2 of the near-field function, (1/(4 pi r^2))^2 {theta(t^2-r^2) + (t/r)^2 theta(r^2-t^2)}.
double nf_squared(SpacetimePoint p);

// Share of int_{-T}^{T} nf_squared dt coming from |t| < r.
double superluminal_fraction(double r, double T);

}  // namespace nearfield::propagators
