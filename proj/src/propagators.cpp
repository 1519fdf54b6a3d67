#include "nearfield/propagators.hpp"

#include <cmath>

#include "nearfield/errors.hpp"

namespace nearfield::propagators {

namespace {

void require_positive_r(double r, const char* who) {
  if (!(r > 0)) throw DomainError(std::string(who) + ": r must be positive");
}

}  // namespace

double schwinger_dn(double t, double r, SignConvention sign) {
  require_positive_r(r, "schwinger_dn");
  const double v = (std::abs(t - r) - std::abs(t + r)) / (8.0 * pi * r);
  return sign == SignConvention::canonical ? v : -v;
}

double schwinger_dn1(double t, double r, LogScale scale) {
  require_positive_r(r, "schwinger_dn1");
  if (!(scale.mu > 0)) throw DomainError("schwinger_dn1: log scale mu must be positive");
  if (std::abs(t) == r) throw ConeSingularityError("schwinger_dn1: logarithmic singularity at |t| = r");
  const double a = t + r;
  const double b = t - r;
  auto xlog = [&](double x) { return x * std::log(std::abs(x) / scale.mu); };
  return (xlog(a) - xlog(b)) / (4.0 * pi * pi * r);
}

complex singular_time(TimeKind kind, SpacetimePoint p, LogScale scale, SignConvention sign) {
  switch (kind) {
    case TimeKind::D_N:
      return schwinger_dn(p.t, p.r, sign);
    case TimeKind::D_N1: {
      const double v = schwinger_dn1(p.t, p.r, scale);
      return sign == SignConvention::canonical ? v : -v;
    }
    case TimeKind::D_N_plus:
    case TimeKind::D_N_minus: {
      const double dn = schwinger_dn(p.t, p.r, sign);
      double dn1 = schwinger_dn1(p.t, p.r, scale);
      if (sign != SignConvention::canonical) dn1 = -dn1;
      const double s = kind == TimeKind::D_N_plus ? -1.0 : 1.0;
      return 0.5 * complex(dn, s * dn1);
    }
  }
  throw DomainError("singular_time: unknown kind");
}

complex singular_mixed(MixedKind kind, MixedPoint p) {
  require_positive_r(p.r, "singular_mixed");
  const double w = p.omega;
  const double r = p.r;
  const complex two_pi_i(0.0, 2.0 * pi);
  switch (kind) {
    case MixedKind::D:
      return std::sin(w * r) / (two_pi_i * r);
    case MixedKind::D1:
      return sgn(w) * std::sin(w * r) / (two_pi_i * r);
    case MixedKind::D_plus:
      return theta(w) * std::sin(w * r) / (two_pi_i * r);
    case MixedKind::D_minus:
      return theta(-w) * std::sin(w * r) / (two_pi_i * r);
    default:
      break;
  }
  if (w == 0.0) throw PoleError("singular_mixed: D_N family has a pole at omega = 0");
  const complex dn = -std::sin(w * r) / (two_pi_i * w * w * r);
  switch (kind) {
    case MixedKind::D_N:
      return dn;
    case MixedKind::D_N1:
      return sgn(w) * dn;
    case MixedKind::D_N_plus:
      return theta(w) * dn;
    case MixedKind::D_N_minus:
      return theta(-w) * dn;
    default:
      break;
  }
  throw DomainError("singular_mixed: unknown kind");
}

complex singular_momentum_nf(SpectralPoint p) {
  if (!(p.k > 0)) throw DomainError("singular_momentum_nf: k must be positive");
  if (p.omega == 0.0) throw PoleError("singular_momentum_nf: pole at omega = 0");
  const double w2 = p.omega * p.omega;
  const double k2 = p.k * p.k;
  const double brace = std::abs(p.omega) * theta(w2 - k2) + p.k * theta(k2 - w2);
  return brace / (complex(0.0, 8.0 * pi * pi) * w2 * p.k);
}

double nf_squared(SpacetimePoint p) {
  require_positive_r(p.r, "nf_squared");
  const double a = 1.0 / (4.0 * pi * p.r * p.r);
  const double t2 = p.t * p.t;
  const double r2 = p.r * p.r;
  return a * a * (theta(t2 - r2) + (t2 / r2) * theta(r2 - t2));
}

double superluminal_fraction(double r, double T) {
  require_positive_r(r, "superluminal_fraction");
  if (!(T > r)) throw DomainError("superluminal_fraction: requires T > r");
  // int_{-r}^{r} (t/r)^2 dt = 2r/3 ; int_{r<|t|<T} 1 dt = 2(T - r)
  const double inner = 2.0 * r / 3.0;
  const double outer = 2.0 * (T - r);
  return inner / (inner + outer);
}

}  // namespace nearfield::propagators
