#include "hqgeo/horizontal_paths.hpp"

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "hqgeo/error.hpp"
#include "hqgeo/frame.hpp"
#include "hqgeo/numerics.hpp"

namespace hqgeo {

namespace {

constexpr int kPhiGrid = 720;

// Positive root of a X^2 + b X + c = 0 (b = -2 tau1), or NaN if none.
struct QuadraticPick {
  double x = std::numeric_limits<double>::quiet_NaN();
  double discriminant = -1.0;
};

QuadraticPick positive_root(double a, double b, double c) {
  QuadraticPick pick;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(a) <= 1e-12 * scale) {
    if (b != 0.0 && -c / b > 0.0) {
      pick.x = -c / b;
      pick.discriminant = b * b;
    }
    return pick;
  }
  const double disc = b * b - 4 * a * c;
  if (disc < 0.0) return pick;
  const double sq = std::sqrt(disc);
  // Stable pair of roots.
  const double qq = -0.5 * (b + std::copysign(sq, b));
  const double r1 = qq / a;
  const double r2 = qq != 0.0 ? c / qq : r1;
  const double best = std::max(r1, r2);
  if (best > 0.0) {
    pick.x = best;
    pick.discriminant = disc;
  }
  return pick;
}

// One straight horizontal move from `p` along s * xi_i (i in 0..3).
SampledCurve::Segment frame_segment(const HeisPoint& p, int i, double s, int intervals) {
  const Vec7 row = frame_matrix(p).row(i).transpose();
  const Vec7 vel = s * row;
  SampledCurve::Segment seg;
  seg.reserve(intervals + 1);
  const Vec7 c0 = p.coords();
  for (int n = 0; n <= intervals; ++n) {
    const double lam = n == intervals ? 1.0 : static_cast<double>(n) / intervals;
    // xi_i's vertical coefficients do not depend on x_i, so the move is affine.
    seg.push_back({lam, HeisPoint::from_coords(c0 + lam * vel), vel});
  }
  return seg;
}

}  // namespace

std::array<double, 4> solve_vertical_coeffs(const PureQuaternion& t) {
  const double tau1 = -t.x / 4, tau2 = -t.y / 4, tau3 = -t.z / 4;
  const double R = std::hypot(tau2, tau3);
  const double scale = std::max(std::abs(tau1), R);
  if (scale == 0.0) return {0, 0, 0, 0};
  if (R <= 1e-15 * scale) {
    const double s = std::sqrt(std::abs(tau1));
    return {0, 0, s, tau1 < 0 ? -s : s};
  }
  const double phi = std::atan2(tau3, tau2);
  QuadraticPick best;
  double best_phi1 = 0.0;
  for (int g = 0; g < kPhiGrid; ++g) {
    const double phi1 = kPi * g / kPhiGrid;
    const QuadraticPick pick = positive_root(std::sin(2 * phi1), -2 * tau1, R * R * std::sin(2 * phi - 2 * phi1));
    if (std::isnan(pick.x)) continue;
    if (pick.discriminant > best.discriminant) {
      best = pick;
      best_phi1 = phi1;
    }
  }
  if (std::isnan(best.x)) fail(ErrorKind::Internal, "vertical connector: no admissible phi1 on the scan grid");
  const double r1 = std::sqrt(best.x);
  const double r2 = R / r1;
  const double phi2 = phi - best_phi1;
  return {r1 * std::cos(best_phi1), r1 * std::sin(best_phi1), r2 * std::cos(phi2), r2 * std::sin(phi2)};
}

VerticalConnectorPlan plan_vertical_connector(const std::array<double, 4>& k) {
  VerticalConnectorPlan plan;
  plan.k = k;
  HeisPoint p;
  plan.corners[0] = p;
  for (int step = 0; step < 8; ++step) {
    const int i = step % 4;
    const double s = step < 4 ? k[i] : -k[i];
    const Vec7 c = p.coords() + s * frame_matrix(p).row(i).transpose();
    p = HeisPoint::from_coords(c);
    plan.corners[step + 1] = p;
  }
  return plan;
}

SampledCurve vertical_connector(const std::array<double, 4>& k, int intervals) {
  if (intervals < 2 || intervals % 2) fail(ErrorKind::Parameter, "segment intervals must be even and >= 2");
  if (k == std::array<double, 4>{0, 0, 0, 0}) return SampledCurve::constant(HeisPoint{});
  const VerticalConnectorPlan plan = plan_vertical_connector(k);
  std::vector<SampledCurve> parts;
  for (int step = 0; step < 8; ++step) {
    const int i = step % 4;
    const double s = step < 4 ? k[i] : -k[i];
    parts.push_back(SampledCurve({frame_segment(plan.corners[step], i, s, intervals)}));
  }
  return SampledCurve::concatenate(parts);
}

SampledCurve vertical_connector(const PureQuaternion& t, int intervals) {
  return vertical_connector(solve_vertical_coeffs(t), intervals);
}

PlanarCurve PlanarCurve::segment(const Quaternion& from, const Quaternion& to) {
  const Quaternion d = to - from;
  return {[from, d](double lam) { return from + d * lam; }, [d](double) { return d; }};
}

SampledCurve horizontal_lift(const PlanarCurve& alpha, const HeisPoint& start, int intervals) {
  if (intervals < 2 || intervals % 2) fail(ErrorKind::Parameter, "lift intervals must be even and >= 2");
  const Quaternion a0 = alpha.position(0.0);
  if ((a0 - start.q).norm() > 1e-12 * (1.0 + start.q.norm()))
    fail(ErrorKind::Input, "horizontal_lift: alpha(0) does not match the start point");

  auto vertical_rate = [&](double lam) -> Vec3 {
    const HeisPoint at{alpha.position(lam), {}};
    const Quaternion d = alpha.velocity(lam);
    Vec7 w = Vec7::Zero();
    w.head<4>() << d.w, d.x, d.y, d.z;
    return -theta_eval(at, w);
  };

  using Gauss = boost::math::quadrature::gauss<double, 10>;
  SampledCurve::Segment seg;
  seg.reserve(intervals + 1);
  Vec3 beta(start.t.x, start.t.y, start.t.z);
  double prev = 0.0;
  for (int n = 0; n <= intervals; ++n) {
    const double lam = n == intervals ? 1.0 : static_cast<double>(n) / intervals;
    if (n > 0) {
      for (int a = 0; a < 3; ++a)
        beta[a] += Gauss::integrate([&](double s) { return vertical_rate(s)[a]; }, prev, lam);
    }
    const Quaternion q = n == 0 ? start.q : alpha.position(lam);
    const Quaternion d = alpha.velocity(lam);
    Vec7 vel;
    vel << d.w, d.x, d.y, d.z, vertical_rate(lam);
    seg.push_back({lam, HeisPoint{q, {beta[0], beta[1], beta[2]}}, vel});
    prev = lam;
  }
  return SampledCurve({std::move(seg)});
}

SampledCurve connect(const HeisPoint& from, const HeisPoint& to, int intervals) {
  if (from == to) return SampledCurve::constant(from);
  std::vector<SampledCurve> parts;
  HeisPoint reached = from;
  if (from.q != to.q) {
    parts.push_back(horizontal_lift(PlanarCurve::segment(from.q, to.q), from, intervals));
    reached = parts.back().end();
    reached.q = to.q;  // exact by construction; drop rounding in the lifted endpoint
  }
  const PureQuaternion gap = relative(reached, to).t;
  if (gap.norm2() > 0.0) parts.push_back(left_translate(vertical_connector(gap, intervals), reached));
  if (parts.empty()) return SampledCurve::constant(from);
  return SampledCurve::concatenate(parts);
}

double length_cc(const SampledCurve& c) {
  double total = 0.0;
  std::vector<double> speed;
  for (const auto& seg : c.segments()) {
    speed.clear();
    for (const auto& s : seg) {
      if (!s.velocity) fail(ErrorKind::Input, "curve has no velocities");
      speed.push_back(s.velocity->head<4>().norm());
    }
    const double a = seg.front().lambda, b = seg.back().lambda;
    bool uniform = speed.size() >= 3 && speed.size() % 2 == 1;
    const double h = (b - a) / static_cast<double>(seg.size() - 1);
    for (std::size_t i = 1; uniform && i < seg.size(); ++i)
      uniform = std::abs(seg[i].lambda - seg[i - 1].lambda - h) <= 1e-9 * h;
    if (uniform) {
      total += simpson(speed, a, b);
    } else {
      for (std::size_t i = 1; i < seg.size(); ++i)
        total += 0.5 * (speed[i] + speed[i - 1]) * (seg[i].lambda - seg[i - 1].lambda);
    }
  }
  return total;
}

}  // namespace hqgeo
