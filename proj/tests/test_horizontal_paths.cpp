#include <gtest/gtest.h>

#include <cmath>

#include "hqgeo/cc_metric.hpp"
#include "hqgeo/error.hpp"
#include "hqgeo/frame.hpp"
#include "hqgeo/horizontal_paths.hpp"
#include "hqgeo/numerics.hpp"

using namespace hqgeo;

namespace {

double dist(const HeisPoint& a, const HeisPoint& b) { return (a.coords() - b.coords()).norm(); }

void expect_bilinear(const PureQuaternion& t, const std::array<double, 4>& k, double tol) {
  EXPECT_NEAR(k[0] * k[1] + k[2] * k[3], -t.x / 4, tol);
  EXPECT_NEAR(k[0] * k[2] - k[1] * k[3], -t.y / 4, tol);
  EXPECT_NEAR(k[1] * k[2] + k[0] * k[3], -t.z / 4, tol);
}

}  // namespace

TEST(VerticalCoeffs, DegenerateBranch) {
  const auto k = solve_vertical_coeffs({-4, 0, 0});
  EXPECT_EQ(k, (std::array<double, 4>{0, 0, 1, 1}));
  const auto kn = solve_vertical_coeffs({4, 0, 0});
  expect_bilinear({4, 0, 0}, kn, 1e-15);
  EXPECT_EQ(solve_vertical_coeffs({}), (std::array<double, 4>{0, 0, 0, 0}));
}

TEST(VerticalCoeffs, GenericExample) {
  const auto k = solve_vertical_coeffs({0, -4, 0});
  const double h = std::sqrt(0.5);
  EXPECT_NEAR(k[0], h, 1e-12);
  EXPECT_NEAR(k[1], h, 1e-12);
  EXPECT_NEAR(k[2], h, 1e-12);
  EXPECT_NEAR(k[3], -h, 1e-12);
}

TEST(VerticalCoeffs, RandomTargets) {
  Rng rng(11);
  for (int n = 0; n < 1000; ++n) {
    const PureQuaternion t = rng.pure(rng.uniform(0.01, 10.0));
    expect_bilinear(t, solve_vertical_coeffs(t), 1e-10 * std::max(1.0, t.norm()));
  }
  // the tau1 = 0 and pure-tau1 sub-cases
  expect_bilinear({0, 3, -2}, solve_vertical_coeffs({0, 3, -2}), 1e-12);
  expect_bilinear({-7, 0, 0}, solve_vertical_coeffs({-7, 0, 0}), 1e-12);
}

TEST(VerticalConnector, CornerPoints) {
  const auto plan = plan_vertical_connector({1, 1, 0, 0});
  EXPECT_LE(dist(plan.corners[8], {{}, {-4, 0, 0}}), 1e-15);
  const std::array<double, 4> k{0.3, -1.1, 0.7, 2.0};
  const auto p = plan_vertical_connector(k).corners[8];
  EXPECT_LE(p.q.norm(), 1e-15);
  EXPECT_NEAR(p.t.x, -4 * (k[0] * k[1] + k[2] * k[3]), 1e-14);
  EXPECT_NEAR(p.t.y, -4 * (k[0] * k[2] - k[1] * k[3]), 1e-14);
  EXPECT_NEAR(p.t.z, -4 * (k[1] * k[2] + k[0] * k[3]), 1e-14);
}

TEST(VerticalConnector, Endpoints) {
  const SampledCurve c = vertical_connector(std::array<double, 4>{1, 1, 0, 0});
  EXPECT_LE(dist(c.end(), {{}, {-4, 0, 0}}), 1e-9);
  EXPECT_LE(horizontality_residual(c), 1e-9);
  const SampledCurve z = vertical_connector(PureQuaternion{});
  EXPECT_EQ(z.start(), z.end());
  EXPECT_EQ(length_cc(z), 0.0);
  Rng rng(12);
  for (int n = 0; n < 50; ++n) {
    const PureQuaternion t = rng.pure(2.0);
    const SampledCurve v = vertical_connector(t);
    v.validate();
    EXPECT_LE(dist(v.start(), {}), 1e-15);
    EXPECT_LE(dist(v.end(), {{}, t}), 1e-9);
    EXPECT_LE(horizontality_residual(v), 1e-9);
  }
}

TEST(VerticalConnector, LengthIsSumOfSegmentSpeeds) {
  // k = (1, 1, 0, 0): the k3 and k4 segments are degenerate, so 2 (|k1| + |k2|) = 4.
  EXPECT_NEAR(length_cc(vertical_connector(std::array<double, 4>{1, 1, 0, 0})), 4.0, 1e-12);
  const std::array<double, 4> k{0.5, -1.5, 2.0, 0.25};
  EXPECT_NEAR(length_cc(vertical_connector(k)), 2 * (0.5 + 1.5 + 2.0 + 0.25), 1e-12);
}

TEST(Lift, StraightLine) {
  const Quaternion q{1, 2, -1, 0.5};
  const SampledCurve c = horizontal_lift(PlanarCurve::segment({}, q), {});
  for (const auto& s : c.samples()) {
    EXPECT_LE(dist(s.point, {q * s.lambda, {}}), 1e-15);
  }
  EXPECT_NEAR(length_cc(c), q.norm(), 1e-14);
}

TEST(Lift, Circle) {
  const double w = kTwoPi;
  const PlanarCurve circle{[w](double l) { return Quaternion{std::sin(w * l) / w, (1 - std::cos(w * l)) / w, 0, 0}; },
                           [w](double l) { return Quaternion{std::cos(w * l), std::sin(w * l), 0, 0}; }};
  const SampledCurve c = horizontal_lift(circle, {});
  EXPECT_LE(dist(c.end(), {{}, {-1.0 / kPi, 0, 0}}), 1e-12);
  EXPECT_LE(horizontality_residual(c), 1e-12);
}

TEST(Lift, StartOffsetAndMismatch) {
  const PureQuaternion t0{0.5, -1, 2};
  const Quaternion q{0, 1, 0, 0};
  const SampledCurve c = horizontal_lift(PlanarCurve::segment({}, q), {{}, t0});
  EXPECT_LE(dist(c.end(), {q, t0}), 1e-15);
  try {
    horizontal_lift(PlanarCurve::segment(q, q * 2), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Input);
  }
}

TEST(Lift, RandomPlanarCurve) {
  Rng rng(13);
  for (int n = 0; n < 10; ++n) {
    const Quaternion a = rng.quaternion(), b = rng.quaternion();
    const double w = rng.uniform(0.5, 4.0);
    const PlanarCurve alpha{[=](double l) { return a * std::sin(w * l) + b * (l * l); },
                            [=](double l) { return a * (w * std::cos(w * l)) + b * (2 * l); }};
    EXPECT_LE(horizontality_residual(horizontal_lift(alpha, {})), 1e-9);
  }
}

TEST(Connect, Examples) {
  const HeisPoint p{{1, 2, 3, 4}, {5, 6, 7}};
  const SampledCurve same = connect(p, p);
  EXPECT_EQ(same.start(), p);
  EXPECT_EQ(same.end(), p);
  EXPECT_EQ(length_cc(same), 0.0);

  const Quaternion q{0.3, -1, 2, 0};
  const SampledCurve line = connect({}, {q, {}});
  EXPECT_EQ(line.segments().size(), 1u);
  EXPECT_NEAR(length_cc(line), q.norm(), 1e-13);
}

TEST(Connect, RandomPairs) {
  Rng rng(14);
  for (int n = 0; n < 100; ++n) {
    const HeisPoint a = rng.point(), b = rng.point();
    const SampledCurve c = connect(a, b);
    c.validate();
    EXPECT_LE(dist(c.start(), a), 1e-8);
    EXPECT_LE(dist(c.end(), b), 1e-8);
    EXPECT_LE(horizontality_residual(c), 1e-8);
    EXPECT_GE(length_cc(c), cc_distance(a, b) - 1e-9);
  }
}

TEST(LengthCC, Invariances) {
  Rng rng(15);
  for (int n = 0; n < 20; ++n) {
    const SampledCurve c = connect(rng.point(), rng.point());
    const double l = length_cc(c);
    EXPECT_NEAR(length_cc(left_translate(c, rng.point())), l, 1e-10);
    const double d = rng.uniform(0.2, 5.0);
    EXPECT_NEAR(length_cc(dilate(c, d)), d * l, 1e-10 * d * l);
    EXPECT_LE(horizontality_residual(left_translate(c, rng.point())), 1e-8);
  }
}

TEST(LengthCC, VerticalSegmentHasZeroLength) {
  SampledCurve::Segment seg;
  Vec7 v = Vec7::Zero();
  v[4] = 2.0;
  for (int k = 0; k <= 4; ++k) seg.push_back({k / 4.0, {{}, {2.0 * k / 4.0, 0, 0}}, v});
  EXPECT_EQ(length_cc(SampledCurve({seg})), 0.0);
}

TEST(Curve, VelocitiesMatchDifferences) {
  Rng rng(16);
  const SampledCurve c = connect(rng.point(), rng.point(), 512);
  for (const auto& seg : c.segments()) {
    for (std::size_t k = 1; k + 1 < seg.size(); ++k) {
      const double dl = seg[k + 1].lambda - seg[k - 1].lambda;
      const Vec7 fd = (seg[k + 1].point.coords() - seg[k - 1].point.coords()) / dl;
      EXPECT_LE((fd - *seg[k].velocity).norm(), 1e-3 * (1 + seg[k].velocity->norm()));
    }
  }
}
