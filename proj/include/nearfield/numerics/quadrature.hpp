#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "nearfield/constants.hpp"
#include "nearfield/errors.hpp"

namespace nearfield::numerics {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  std::optional<double> oscillation_frequency_hint;

  void validate() const;
};

template <typename T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  int subdivisions = 0;
};

namespace detail {

// Gauss-Kronrod 10/21 abscissae and weights.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208067346858, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <typename F, typename X>
using result_of_t = std::invoke_result_t<F&, X>;

template <typename T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <typename T>
struct Segment {
  double a;
  double b;
  T value;
  double error;
  double abs_value;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename T, typename F>
Segment<T> gk21(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kronrod = fc * kWgk[10];
  T gauss{};
  double abs_sum = magnitude(fc) * kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const T f1 = f(c - dx);
    const T f2 = f(c + dx);
    kronrod += (f1 + f2) * kWgk[j];
    abs_sum += (magnitude(f1) + magnitude(f2)) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  Segment<T> s{a, b, kronrod * h, 0.0, abs_sum * std::abs(h)};
  s.error = magnitude(T((kronrod - gauss) * h));
  return s;
}

// Adaptive global bisection on a finite interval.
template <typename T, typename F>
QuadratureResult<T> adaptive(F& f, double a, double b, const QuadratureSpec& spec) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::priority_queue<Segment<T>> heap;
  std::vector<Segment<T>> finished;
  heap.push(gk21<T>(f, a, b));
  int subdivisions = 0;
  double frozen_error = 0.0;  // error held by segments too narrow to split
  auto totals = [&](T& value, double& error, double& abs_value) {
    value = T{};
    error = 0.0;
    abs_value = 0.0;
    auto add = [&](const Segment<T>& s) {
      value += s.value;
      error += s.error;
      abs_value += s.abs_value;
    };
    for (const auto& s : finished) add(s);
    frozen_error = error;
    auto copy = heap;
    while (!copy.empty()) {
      add(copy.top());
      copy.pop();
    }
  };
  T value{};
  double error = 0.0;
  double abs_value = 0.0;
  totals(value, error, abs_value);
  while (true) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * magnitude(value));
    const double floor = 50.0 * eps * abs_value;
    if (error - frozen_error <= std::max(tol, floor) || heap.empty()) break;
    if (subdivisions >= spec.max_subdivisions) {
      throw ConvergenceError("quadrature: subdivision budget exhausted (error estimate " +
                                 std::to_string(error) + ")",
                             magnitude(value), error);
    }
    Segment<T> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64.0 * eps * std::abs(mid)) {
      finished.push_back(worst);
      frozen_error += worst.error;
    } else {
      Segment<T> left = gk21<T>(f, worst.a, mid);
      Segment<T> right = gk21<T>(f, mid, worst.b);
      value += left.value + right.value - worst.value;
      error += left.error + right.error - worst.error;
      abs_value += left.abs_value + right.abs_value - worst.abs_value;
      heap.push(left);
      heap.push(right);
      ++subdivisions;
    }
    if (subdivisions % 64 == 0) totals(value, error, abs_value);
  }
  totals(value, error, abs_value);
  return {value, error, subdivisions};
}

// Epsilon-algorithm extrapolation over the most recent partial sums.
template <typename T>
class WynnEpsilon {
 public:
  explicit WynnEpsilon(std::size_t window = 24) : window_(window) {}

  T push(T s) {
    sums_.push_back(s);
    if (sums_.size() > window_) sums_.erase(sums_.begin());
    const std::size_t m = sums_.size();
    std::vector<T> prev(m + 1, T{});
    std::vector<T> cur = sums_;
    T best = sums_.back();
    for (std::size_t k = 1; k < m; ++k) {
      std::vector<T> next(cur.size() - 1);
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        const T diff = cur[i + 1] - cur[i];
        if (magnitude(diff) <= 1e-300) return best;
        next[i] = prev[i + 1] + T(1.0) / diff;
      }
      prev = std::move(cur);
      cur = std::move(next);
      if (k % 2 == 0) best = cur.back();
    }
    return best;
  }

 private:
  std::size_t window_;
  std::vector<T> sums_;
};

}  // namespace detail

template <typename F>
using integral_t = std::conditional_t<
    std::is_convertible_v<detail::result_of_t<F, double>, double>, double, complex>;

// Integral of f over [a, b]. Either endpoint may be infinite; infinite
// ranges are mapped to [0, 1) by x = a + s/(1 - s).
template <typename F>
QuadratureResult<integral_t<F>> integrate(F&& f, double a, double b, const QuadratureSpec& spec) {
  using T = integral_t<F>;
  spec.validate();
  if (a == b) return {};
  if (a > b) {
    auto r = integrate(f, b, a, spec);
    r.value = -r.value;
    return r;
  }
  const bool lo_inf = std::isinf(a);
  const bool hi_inf = std::isinf(b);
  if (lo_inf && hi_inf) {
    auto left = integrate(f, a, 0.0, spec);
    auto right = integrate(f, 0.0, b, spec);
    return {left.value + right.value, left.error + right.error,
            left.subdivisions + right.subdivisions};
  }
  if (hi_inf) {
    auto g = [&](double s) -> T {
      const double u = 1.0 - s;
      return T(f(a + s / u)) / (u * u);
    };
    return detail::adaptive<T>(g, 0.0, 1.0, spec);
  }
  if (lo_inf) {
    auto g = [&](double s) -> T {
      const double u = 1.0 - s;
      return T(f(b - s / u)) / (u * u);
    };
    return detail::adaptive<T>(g, 0.0, 1.0, spec);
  }
  auto g = [&](double x) -> T { return T(f(x)); };
  return detail::adaptive<T>(g, a, b, spec);
}

// Integral over consecutive pieces [p0, p1], [p1, p2], ... so that kinks and
// jumps sit on segment boundaries.
template <typename F>
QuadratureResult<integral_t<F>> integrate_pieces(F&& f, std::span<const double> points,
                                                 const QuadratureSpec& spec) {
  QuadratureResult<integral_t<F>> total;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    auto r = integrate(f, points[i], points[i + 1], spec);
    total.value += r.value;
    total.error += r.error;
    total.subdivisions += r.subdivisions;
  }
  return total;
}

// Sum of integrals over [a + n L, a + (n+1) L] (direction +1) or the mirrored
// blocks (direction -1), accelerated with the epsilon algorithm. Suited to
// oscillatory tails with L a half period.
template <typename F>
QuadratureResult<integral_t<F>> integrate_tail(F&& f, double a, int direction, double block,
                                               const QuadratureSpec& spec, bool accelerate = true,
                                               int max_blocks = 200000) {
  using T = integral_t<F>;
  if (!(block > 0)) throw DomainError("integrate_tail: block length must be positive");
  detail::WynnEpsilon<T> wynn;
  T sum{};
  T previous_estimate{};
  double error = 0.0;
  int subdivisions = 0;
  int small_blocks = 0;
  int stable = 0;
  QuadratureSpec block_spec = spec;
  for (int n = 0; n < max_blocks; ++n) {
    const double x0 = a + direction * n * block;
    const double x1 = a + direction * (n + 1) * block;
    auto r = integrate(f, std::min(x0, x1), std::max(x0, x1), block_spec);
    const T piece = r.value;
    sum += piece;
    error += r.error;
    subdivisions += r.subdivisions;
    const double tol = std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(sum));
    small_blocks = detail::magnitude(piece) <= 0.1 * tol ? small_blocks + 1 : 0;
    if (small_blocks >= 3) return {sum, error, subdivisions};
    if (accelerate) {
      const T estimate = wynn.push(sum);
      if (n >= 8 && detail::magnitude(estimate - previous_estimate) <= 0.1 * tol &&
          std::isfinite(detail::magnitude(estimate))) {
        if (++stable >= 3) {
          return {estimate, error + detail::magnitude(estimate - previous_estimate),
                  subdivisions};
        }
      } else {
        stable = 0;
      }
      previous_estimate = estimate;
    }
  }
  throw ConvergenceError("integrate_tail: block summation did not converge",
                         detail::magnitude(sum), error);
}

}  // namespace nearfield::numerics
