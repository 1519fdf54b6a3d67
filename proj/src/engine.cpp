#include "nearfield/engine.hpp"

#include <algorithm>
#include <cmath>

#include "nearfield/errors.hpp"

namespace nearfield::engine {

using numerics::QuadratureSpec;
using propagators::MixedPoint;

double radial_derivative_sinc(double omega, double r) {
  if (!(r > 0)) throw DomainError("radial_derivative_sinc: r must be positive");
  const double u = omega * r;
  double f;
  if (std::abs(u) < 0.5) {
    // u cos u - sin u = sum_{n>=1} (-1)^n 2n u^(2n+1) / (2n+1)!
    const double u2 = u * u;
    double p = u;  // u^(2n+1)/(2n+1)!
    f = 0.0;
    for (int n = 1; n < 12; ++n) {
      p *= u2 / (double(2 * n) * double(2 * n + 1));
      f += (n % 2 ? -1.0 : 1.0) * 2.0 * n * p;
    }
  } else {
    f = u * std::cos(u) - std::sin(u);
  }
  return f / (r * r);
}

complex kernel_mixed(double omega, double r) {
  if (!(r > 0)) throw DomainError("kernel_mixed: r must be positive");
  if (omega == 0.0) throw PoleError("kernel_mixed: pole at omega = 0");
  if (omega > 0) return 0.0;
  return radial_derivative_sinc(omega, r) / (complex(0.0, 2.0 * pi) * omega);
}

complex kernel_momentum(double omega, double k, LightConePrescription prescription, KernelForm form) {
  if (!(k > 0)) throw DomainError("kernel_momentum: k must be positive");
  if (omega == 0.0) throw PoleError("kernel_momentum: pole at omega = 0");
  if (k == std::abs(omega)) throw ConeSingularityError("kernel_momentum: light cone k = |omega|");
  if (omega > 0) return 0.0;
  const double log_term = std::log(std::abs((k - omega) / (k + omega)));
  const double pole_coeff = form == KernelForm::printed ? 4.0 : 2.0;
  const double log_coeff = (form == KernelForm::printed ? -1.0 : 1.0) / (omega * k);
  complex brace = pole_coeff / (k * k - omega * omega) + log_coeff * log_term;
  if (prescription == LightConePrescription::minus_i0 && k < std::abs(omega)) {
    // ln((k - w)/(k + w)) picks up +i pi from k - i0
    brace += log_coeff * complex(0.0, pi);
  }
  return brace / (std::pow(2.0 * pi, 3) * I);
}

GeneralizedCurrent GeneralizedCurrent::point_source(std::function<complex(double)> amplitude) {
  if (!amplitude) throw DomainError("point_source: amplitude callable required");
  GeneralizedCurrent J;
  J.terms_.push_back({1.0, PointCurrent{std::move(amplitude)}});
  return J;
}

GeneralizedCurrent GeneralizedCurrent::radial(std::function<complex(double, double)> density,
                                              double support_radius) {
  if (!density) throw DomainError("radial: density callable required");
  if (!(support_radius > 0)) throw DomainError("radial: support radius must be positive");
  GeneralizedCurrent J;
  J.terms_.push_back({1.0, RadialCurrent{std::move(density), support_radius}});
  return J;
}

GeneralizedCurrent GeneralizedCurrent::radial_grid(std::vector<double> radii,
                                                   std::vector<complex> profile,
                                                   std::function<complex(double)> spectrum) {
  if (radii.size() != profile.size() || radii.size() < 2)
    throw DomainError("radial_grid: need matching radii/profile with at least 2 samples");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1])) throw DomainError("radial_grid: radii must be strictly increasing");
  GeneralizedCurrent J;
  J.terms_.push_back({1.0, GridCurrent{std::move(radii), std::move(profile), std::move(spectrum)}});
  return J;
}

GeneralizedCurrent::Representation GeneralizedCurrent::representation() const {
  for (const auto& t : terms_)
    if (std::holds_alternative<GridCurrent>(t.component)) return Representation::radial_grid;
  return Representation::closed_form;
}

GeneralizedCurrent& GeneralizedCurrent::operator+=(const GeneralizedCurrent& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

GeneralizedCurrent& GeneralizedCurrent::operator*=(complex c) {
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

GeneralizedCurrent operator+(GeneralizedCurrent a, const GeneralizedCurrent& b) { return a += b; }
GeneralizedCurrent operator*(complex c, GeneralizedCurrent a) { return a *= c; }

namespace {

// Sample of a grid profile with linear interpolation.
complex interpolate(const GridCurrent& g, double r) {
  if (r <= g.radii.front()) return g.profile.front();
  if (r >= g.radii.back()) return g.profile.back();
  const auto it = std::upper_bound(g.radii.begin(), g.radii.end(), r);
  const std::size_t i = std::size_t(it - g.radii.begin()) - 1;
  const double w = (r - g.radii[i]) / (g.radii[i + 1] - g.radii[i]);
  return (1.0 - w) * g.profile[i] + w * g.profile[i + 1];
}

void check_grid_support(const GridCurrent& g) {
  if (g.radii.front() != 0.0)
    throw DomainError("unsupported domain: grid current must start at r = 0");
  double peak = 0.0;
  for (const auto& v : g.profile) peak = std::max(peak, std::abs(v));
  if (std::abs(g.profile.back()) > 1e-12 * peak)
    throw DomainError("unsupported domain: grid current does not vanish at its last radius");
}

// Inner shell integrals over s in [|r - r'|, r + r'].
struct ShellKernel {
  double omega;
  // field: int K(s)(s^2 + r^2 - r'^2) ds, K = A d/ds(sin(ws)/s)
  complex field(double r, double rp) const {
    const double c = r * r - rp * rp;
    auto prim = [&](double s) {
      const double g = s == 0.0 ? omega : std::sin(omega * s) / s;
      return g * (s * s + c) + 2.0 / omega * std::cos(omega * s);
    };
    const complex A = theta(-omega) / (complex(0.0, 2.0 * pi) * omega);
    return A * (prim(r + rp) - prim(std::abs(r - rp)));
  }
  // density: int k(s) s ds with k(s) = theta(-w) w sin(ws)/(8 pi^2 s)
  double density(double r, double rp) const {
    return theta(-omega) / (8.0 * pi * pi) *
           (std::cos(omega * std::abs(r - rp)) - std::cos(omega * (r + rp)));
  }
};

template <typename Inner, typename Point>
complex convolve(const GeneralizedCurrent& J, MixedPoint p, const QuadratureSpec& spec,
                 double shell_prefactor, Inner inner, Point point) {
  if (!(p.r > 0)) throw DomainError("convolution: r must be positive");
  complex total = 0.0;
  for (const auto& term : J.terms()) {
    complex v = 0.0;
    if (const auto* pc = std::get_if<PointCurrent>(&term.component)) {
      v = pc->amplitude(p.omega) * point(p);
    } else if (const auto* rc = std::get_if<RadialCurrent>(&term.component)) {
      std::vector<double> pts = {0.0, rc->support_radius};
      if (p.r < rc->support_radius) pts.insert(pts.begin() + 1, p.r);
      auto f = [&](double rp) { return rp * rc->density(p.omega, rp) * inner(p.r, rp); };
      v = shell_prefactor * numerics::integrate_pieces(f, pts, spec).value;
    } else {
      const auto& g = std::get<GridCurrent>(term.component);
      check_grid_support(g);
      std::vector<double> pts = g.radii;
      if (p.r < g.radii.back()) {
        pts.push_back(p.r);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      }
      auto f = [&](double rp) { return rp * interpolate(g, rp) * inner(p.r, rp); };
      const complex s = g.spectrum ? g.spectrum(p.omega) : complex(1.0);
      v = s * shell_prefactor * numerics::integrate_pieces(f, pts, spec).value;
    }
    total += term.coefficient * v;
  }
  return total;
}

}  // namespace

complex field_from_current(const GeneralizedCurrent& J, MixedPoint p, const QuadratureSpec& spec) {
  if (p.omega == 0.0) throw PoleError("field_from_current: kernel pole at omega = 0");
  if (p.omega > 0 || J.empty()) return 0.0;
  const ShellKernel shell{p.omega};
  return convolve(
      J, p, spec, pi / (p.r * p.r),
      [&](double r, double rp) { return shell.field(r, rp); },
      [](MixedPoint q) { return kernel_mixed(q.omega, q.r); });
}

complex charge_density_from_current(const GeneralizedCurrent& J, MixedPoint p,
                                    const QuadratureSpec& spec) {
  if (p.omega >= 0 || J.empty()) {
    if (!(p.r > 0)) throw DomainError("charge_density_from_current: r must be positive");
    return 0.0;
  }
  const ShellKernel shell{p.omega};
  return convolve(
      J, p, spec, 2.0 * pi / p.r,
      [&](double r, double rp) { return complex(shell.density(r, rp)); },
      [](MixedPoint q) {
        // (1/4pi) (i w) D^(-)(w, r), D = sin(wr)/(2 pi i r)
        return complex(theta(-q.omega) * q.omega * std::sin(q.omega * q.r) /
                       (8.0 * pi * pi * q.r));
      });
}

propagators::TensorBlock commutator_ee(double t, const Eigen::Vector3d& r_vec) {
  const double r = r_vec.norm();
  if (!(r > 0)) throw DomainError("commutator_ee: r must be positive");
  if (std::abs(t) >= r) throw ConeSingularityError("commutator_ee: closed form needs |t| < r");
  const Eigen::Vector3d e = r_vec / r;
  // d_i d_j (1/r) = (3 e_i e_j - delta_ij)/r^3 ; d_t^2 (-t/4pi r) = 0
  const Eigen::Matrix3d hess = (3.0 * e * e.transpose() - Eigen::Matrix3d::Identity()) / (r * r * r);
  propagators::TensorBlock b;
  b.region = propagators::Region::NF;
  b.e = e;
  b.values = (hess * (-t / (4.0 * pi))).cast<complex>() / complex(0.0, 4.0 * pi);
  return b;
}

Eigen::Vector3cd commutator_eh(double t, const Eigen::Vector3d& r_vec) {
  const double r = r_vec.norm();
  if (!(r > 0)) throw DomainError("commutator_eh: r must be positive");
  if (std::abs(t) >= r) throw ConeSingularityError("commutator_eh: closed form needs |t| < r");
  const Eigen::Vector3d e = r_vec / r;
  // d_j (-1/(4 pi r)) = e_j / (4 pi r^2)
  return (e / (4.0 * pi * r * r)).cast<complex>() / complex(0.0, 4.0 * pi);
}

}  // namespace nearfield::engine
