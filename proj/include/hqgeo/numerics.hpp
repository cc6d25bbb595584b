#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>

#include "hqgeo/error.hpp"
#include "hqgeo/heis_group.hpp"

namespace hqgeo {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// 1 - cos x without cancellation.
inline double one_minus_cos(double x) {
  const double s = std::sin(0.5 * x);
  return 2.0 * s * s;
}

/// f(x) = x - sin x, Taylor-expanded for |x| < 0.1.
inline double x_minus_sin(double x) {
  if (std::abs(x) < 0.1) {
    const double x2 = x * x;
    // x^3/3! - x^5/5! + x^7/7! - x^9/9! + x^11/11!
    return x * x2 * (1.0 / 6 - x2 * (1.0 / 120 - x2 * (1.0 / 5040 - x2 * (1.0 / 362880 - x2 / 39916800.0))));
  }
  return x - std::sin(x);
}

/// f(x)/x^3, finite at 0.
inline double xms_over_cube(double x) {
  if (std::abs(x) < 0.1) {
    const double x2 = x * x;
    return 1.0 / 6 - x2 * (1.0 / 120 - x2 * (1.0 / 5040 - x2 * (1.0 / 362880 - x2 / 39916800.0)));
  }
  return (x - std::sin(x)) / (x * x * x);
}

/// Bisection on a bracket [lo, hi] with f(lo), f(hi) of opposite sign (or zero).
/// Stops when the bracket no longer shrinks or is narrower than xtol.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol = 0.0) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) fail(ErrorKind::Internal, "bisection: root not bracketed");
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= xtol) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Composite Simpson over equally spaced values (odd count >= 3) on [a, b].
inline double simpson(std::span<const double> y, double a, double b) {
  const std::size_t n = y.size();
  if (n < 3 || n % 2 == 0) fail(ErrorKind::Input, "simpson needs an odd number (>= 3) of samples");
  double acc = y[0] + y[n - 1];
  for (std::size_t i = 1; i + 1 < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * y[i];
  return acc * (b - a) / (3.0 * static_cast<double>(n - 1));
}

/// Deterministic generator: mt19937_64 output is fixed by the standard, and the
/// conversions below avoid implementation-defined std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 42) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

  Quaternion quaternion(double scale = 1.0) { return {scale * normal(), scale * normal(), scale * normal(), scale * normal()}; }
  PureQuaternion pure(double scale = 1.0) { return {scale * normal(), scale * normal(), scale * normal()}; }
  Quaternion unit_quaternion() {
    Quaternion q = quaternion();
    return q / q.norm();
  }
  PureQuaternion unit_pure() {
    PureQuaternion v = pure();
    return v / v.norm();
  }
  HeisPoint point(double scale = 1.0) { return {quaternion(scale), pure(scale)}; }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hqgeo
