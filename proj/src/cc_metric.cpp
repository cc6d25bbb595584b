#include "hqgeo/cc_metric.hpp"

#include <cmath>
#include <limits>

#include "hqgeo/error.hpp"
#include "hqgeo/numerics.hpp"

namespace hqgeo {

namespace {

void require_unit_b(const Quaternion& B) {
  if (!(std::abs(B.norm() - 1.0) <= 1e-9)) fail(ErrorKind::Parameter, "CC geodesic needs |B| = 1");
}

// Denominator factor of the x0 equation.
double x0_scale(Convention conv) { return conv == Convention::Corrected ? 1.0 : 2.0; }

}  // namespace

HeisPoint cc_geodesic_eval(const PureQuaternion& A, const Quaternion& B, double lam, Convention conv) {
  require_unit_b(B);
  const double x = A.norm() * lam;
  const double h = sinc(0.5 * x);
  const Quaternion factor = (Quaternion(sinc(x)) + Quaternion(A) * (0.5 * lam * h * h)) * lam;
  return {factor * B, A * (-vertical_kappa(conv) * lam * lam * lam * xms_over_cube(x))};
}

Vec7 cc_geodesic_velocity(const PureQuaternion& A, const Quaternion& B, double lam, Convention conv) {
  require_unit_b(B);
  const Quaternion qdot = exp_pure(A * lam) * B;
  const double h = sinc(0.5 * A.norm() * lam);
  const PureQuaternion tdot = A * (-vertical_kappa(conv) * 0.5 * lam * lam * h * h);
  Vec7 w;
  w << qdot.w, qdot.x, qdot.y, qdot.z, tdot.x, tdot.y, tdot.z;
  return w;
}

SampledCurve cc_geodesic_sample(const CCGeodesic& g, int intervals, Convention conv) {
  if (intervals < 2) fail(ErrorKind::Parameter, "need at least two intervals");
  SampledCurve::Segment seg;
  seg.reserve(intervals + 1);
  for (int n = 0; n <= intervals; ++n) {
    const double lam = n == intervals ? 1.0 : static_cast<double>(n) / intervals;
    const double s = g.length * lam;
    seg.push_back({lam, cc_geodesic_eval(g.A, g.B, s, conv), g.length * cc_geodesic_velocity(g.A, g.B, s, conv)});
  }
  return SampledCurve({std::move(seg)});
}

double x0_equation_lhs(double x, Convention conv) {
  return one_minus_cos(x) / (x0_scale(conv) * x_minus_sin(x));
}

double x0_solve(double ratio, Convention conv) {
  if (std::isnan(ratio) || ratio < 0.0) fail(ErrorKind::Domain, "x0_solve: ratio must be non-negative");
  if (std::isinf(ratio)) return 0.0;
  if (ratio == 0.0) return kTwoPi;
  const double c = x0_scale(conv) * ratio;
  // (1 - cos x) - c (x - sin x): positive just right of 0, negative at 2 pi, one sign change.
  double lo = 0.0, hi = kTwoPi;
  for (int it = 0; it < 4000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g = one_minus_cos(mid) - c * x_minus_sin(mid);
    if (g > 0.0) lo = mid;
    else if (g < 0.0) hi = mid;
    else return mid;
  }
  return 0.5 * (lo + hi);
}

double ratio_of_x0(double x0, Convention conv) {
  // x^4 / (4 (1-cos)^2 + c f^2) = 1 / (sinc(x/2)^4 + (k x f/x^3)^2), k = 2 or 4
  const double k = conv == Convention::Corrected ? 2.0 : 4.0;
  const double h = sinc(0.5 * x0);
  const double v = k * x0 * xms_over_cube(x0);
  return std::pow(h * h * h * h + v * v, -0.25);
}

double cc_distance_origin(const HeisPoint& p, Convention conv) {
  const double tn = p.t.norm();
  if (tn == 0.0) return p.q.norm();
  const double x0 = x0_solve(p.q.norm2() / tn, conv);
  return ratio_of_x0(x0, conv) * koranyi_gauge(p);
}

double cc_distance(const HeisPoint& a, const HeisPoint& b, Convention conv) {
  return cc_distance_origin(relative(a, b), conv);
}

double comparison_ratio(const HeisPoint& p, Convention conv) {
  const double tn = p.t.norm();
  if (tn == 0.0 && p.q.norm2() == 0.0) fail(ErrorKind::Domain, "comparison_ratio is undefined at the origin");
  if (tn == 0.0) return 1.0;
  return ratio_of_x0(x0_solve(p.q.norm2() / tn, conv), conv);
}

CCGeodesic solve_cc_geodesic(const HeisPoint& target, Convention conv, double* b_norm_defect) {
  CCGeodesic g;
  const double tn = target.t.norm();
  const double qn = target.q.norm();
  if (b_norm_defect) *b_norm_defect = 0.0;
  if (tn == 0.0) {
    g.length = qn;
    g.B = qn > 0.0 ? target.q / qn : Quaternion(1.0);
    return g;
  }
  const double x0 = x0_solve(target.q.norm2() / tn, conv);
  g.length = ratio_of_x0(x0, conv) * koranyi_gauge(target);
  g.A = target.t * (-(x0 / g.length) / tn);
  if (qn == 0.0) return g;  // exp(A R) = 1: every unit B ends at q = 0
  const double h = sinc(0.5 * x0);
  const Quaternion factor = (Quaternion(sinc(x0)) + Quaternion(g.A) * (0.5 * g.length * h * h)) * g.length;
  Quaternion B = inverse(factor) * target.q;
  if (b_norm_defect) *b_norm_defect = std::abs(B.norm() - 1.0);
  g.B = B / B.norm();
  return g;
}

std::vector<HeisPoint> cc_sphere_sample(double R, std::size_t n, std::uint64_t seed, Convention conv) {
  if (!(R > 0.0)) fail(ErrorKind::Parameter, "sphere radius must be positive");
  if (n == 0) fail(ErrorKind::Parameter, "sphere sample count must be >= 1");
  Rng rng(seed);
  std::vector<HeisPoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = n == 1 ? 0.0 : kTwoPi * static_cast<double>(k) / static_cast<double>(n - 1);
    const PureQuaternion A = rng.unit_pure() * (x / R);
    const Quaternion B = rng.unit_quaternion();
    out.push_back(cc_geodesic_eval(A, B, R, conv));
  }
  return out;
}

std::vector<HeisPoint> koranyi_sphere_sample(double R, std::size_t n, std::uint64_t seed) {
  if (!(R > 0.0)) fail(ErrorKind::Parameter, "sphere radius must be positive");
  if (n == 0) fail(ErrorKind::Parameter, "sphere sample count must be >= 1");
  Rng rng(seed);
  std::vector<HeisPoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    // |q|^4 + |t|^2 = R^4 with |q|^2 = R^2 cos(psi), |t| = R^2 sin(psi)
    const double psi = n == 1 ? 0.0 : 0.5 * kPi * static_cast<double>(k) / static_cast<double>(n - 1);
    const Quaternion q = rng.unit_quaternion() * (R * std::sqrt(std::max(0.0, std::cos(psi))));
    const PureQuaternion t = rng.unit_pure() * (R * R * std::sin(psi));
    out.push_back({q, t});
  }
  return out;
}

}  // namespace hqgeo
