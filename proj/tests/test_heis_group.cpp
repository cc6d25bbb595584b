#include <gtest/gtest.h>

#include <cmath>

#include "hqgeo/error.hpp"
#include "hqgeo/heis_group.hpp"
#include "hqgeo/numerics.hpp"

using namespace hqgeo;

namespace {

double dist(const HeisPoint& a, const HeisPoint& b) { return (a.coords() - b.coords()).norm(); }

void expect_point(const HeisPoint& a, const HeisPoint& b, double tol = 1e-15) { EXPECT_LE(dist(a, b), tol) << a.coords().transpose() << " vs " << b.coords().transpose(); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(Compose, HorizontalTimesVertical) {
  const HeisPoint a{{1, 2, 3, 4}, {}}, b{{}, {5, 6, 7}};
  expect_point(compose(a, b), {{1, 2, 3, 4}, {5, 6, 7}});
}

TEST(Compose, TwistOfUnitQuaternions) {
  // qa conj(qb) with qa = i, qb = j gives i(-j) = -k.
  const HeisPoint i{Quaternion::i(), {}}, j{Quaternion::j(), {}};
  expect_point(compose(i, j), {{0, 1, 1, 0}, {0, 0, -2}});
  expect_point(compose(j, i), {{0, 1, 1, 0}, {0, 0, 2}});
}

TEST(Compose, GroupAxioms) {
  Rng rng(1);
  for (int n = 0; n < 500; ++n) {
    const HeisPoint a = rng.point(), b = rng.point(), c = rng.point();
    expect_point(compose(compose(a, b), c), compose(a, compose(b, c)), 1e-12);
    expect_point(compose(a, HeisPoint::identity()), a);
    expect_point(compose(HeisPoint::identity(), a), a);
    expect_point(compose(invert(a), a), HeisPoint::identity(), 1e-12);
    expect_point(compose(a, invert(a)), HeisPoint::identity(), 1e-12);
  }
}

TEST(Invert, Examples) {
  expect_point(invert(HeisPoint::identity()), HeisPoint::identity());
  expect_point(invert({{1, -2, 3, 0.5}, {}}), {{-1, 2, -3, -0.5}, {}});
}

TEST(Automorphism, Dilation) {
  const HeisPoint p{{1, 2, 3, 4}, {1, -1, 2}};
  expect_point(hqgeo::apply(Dilation{MetricScale(2.0)}, p), {{2, 4, 6, 8}, {4, -4, 8}});
  EXPECT_THROW(MetricScale(0.0), Error);
  EXPECT_THROW(MetricScale(-1.0), Error);
}

TEST(Automorphism, Sp1Example) {
  const HeisPoint p{Quaternion(1.0), {0, 1, 0}};
  expect_point(hqgeo::apply(Sp1Action{Quaternion::i()}, p), {Quaternion::i(), {0, -1, 0}});
}

TEST(Automorphism, InversionIsAnInvolution) {
  Rng rng(2);
  for (int n = 0; n < 500; ++n) {
    const HeisPoint p = rng.point();
    expect_point(hqgeo::apply(Inversion{}, hqgeo::apply(Inversion{}, p)), p, 1e-10 * (1 + p.coords().norm()));
  }
}

TEST(Automorphism, InversionInvertsTheGauge) {
  Rng rng(3);
  for (int n = 0; n < 500; ++n) {
    const HeisPoint p = rng.point();
    EXPECT_NEAR(koranyi_gauge(hqgeo::apply(Inversion{}, p)) * koranyi_gauge(p), 1.0, 1e-10);
  }
}

TEST(Automorphism, InversionDistanceDistortionMeasured) {
  // Recorded behaviour: d_K(I a, I b) = d_K(a, b) / (|a|_K |b|_K) on random pairs.
  Rng rng(4);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const HeisPoint a = rng.point(), b = rng.point();
    const double lhs = koranyi_distance(hqgeo::apply(Inversion{}, a), hqgeo::apply(Inversion{}, b));
    const double rhs = koranyi_distance(a, b) / (koranyi_gauge(a) * koranyi_gauge(b));
    worst = std::max(worst, std::abs(lhs / rhs - 1.0));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Automorphism, Errors) {
  EXPECT_EQ(kind_of([] { hqgeo::apply(Inversion{}, HeisPoint::identity()); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { hqgeo::apply(Rotation{Quaternion(2.0)}, HeisPoint::identity()); }), ErrorKind::Parameter);
  EXPECT_EQ(kind_of([] { hqgeo::apply(Sp1Action{Quaternion{1, 1, 0, 0}}, HeisPoint::identity()); }), ErrorKind::Parameter);
}

TEST(Automorphism, HomomorphismsAndGaugePreservation) {
  Rng rng(5);
  for (int n = 0; n < 300; ++n) {
    const HeisPoint a = rng.point(), b = rng.point(), g = rng.point();
    const Automorphism maps[] = {Rotation{rng.unit_quaternion()}, Sp1Action{rng.unit_quaternion()},
                                 Dilation{MetricScale(rng.uniform(0.1, 3.0))}};
    for (const auto& m : maps) {
      expect_point(hqgeo::apply(m, compose(a, b)), compose(hqgeo::apply(m, a), hqgeo::apply(m, b)), 1e-11);
    }
    for (int k = 0; k < 2; ++k) EXPECT_NEAR(koranyi_gauge(hqgeo::apply(maps[k], a)), koranyi_gauge(a), 1e-13);
    expect_point(hqgeo::apply(LeftTranslation{g}, a), compose(g, a));
  }
}

TEST(Koranyi, GaugeExamples) {
  EXPECT_DOUBLE_EQ(koranyi_gauge({{3, 0, 4, 0}, {}}), 5.0);
  EXPECT_DOUBLE_EQ(koranyi_gauge({{}, {4, 0, 0}}), 2.0);
  EXPECT_NEAR(koranyi_gauge({Quaternion(1.0), {1, 0, 0}}), std::pow(2.0, 0.25), 1e-15);
}

TEST(Koranyi, DistanceProperties) {
  Rng rng(6);
  for (int n = 0; n < 1000; ++n) {
    const HeisPoint a = rng.point(), b = rng.point(), c = rng.point();
    EXPECT_EQ(koranyi_distance(a, a), 0.0);
    EXPECT_NEAR(koranyi_distance(HeisPoint::identity(), {a.q, {}}), a.q.norm(), 1e-14);
    EXPECT_NEAR(koranyi_distance(compose(c, a), compose(c, b)), koranyi_distance(a, b), 1e-10);
    EXPECT_NEAR(koranyi_distance(a, b), koranyi_distance(b, a), 1e-12);
    const double d = rng.uniform(0.1, 5.0);
    EXPECT_NEAR(koranyi_distance(dilate(a, d), dilate(b, d)), d * koranyi_distance(a, b), 1e-11);
  }
}
