#include <gtest/gtest.h>

#include <cmath>

#include "hqgeo/cc_metric.hpp"
#include "hqgeo/error.hpp"
#include "hqgeo/hypersurface.hpp"
#include "hqgeo/numerics.hpp"

using namespace hqgeo;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

ImplicitSurface coordinate_surface(int k) { return {ScalarField{[k](const Vec7& x) { return x[k]; }, nullptr, nullptr}}; }

RadialProfile korany_profile(double R) {
  return {[R](double r) { return std::sqrt(std::pow(R, 4) - std::pow(r, 4)); }, nullptr, nullptr};
}

RadialProfile polynomial_profile(double a, double b, double c) {
  return {[=](double r) { return a + b * r * r + c * std::pow(r, 4); }, [=](double r) { return 2 * b * r + 4 * c * std::pow(r, 3); },
          [=](double r) { return 2 * b + 12 * c * r * r; }};
}

HeisPoint on_profile(Rng& rng, const RadialProfile& fp, double r) {
  return {rng.unit_quaternion() * r, rng.unit_pure() * fp.value(r)};
}

}  // namespace

TEST(HorizontalGradient, Examples) {
  Rng rng(41);
  EXPECT_LE((horizontal_gradient(coordinate_surface(0), rng.point()) - Vec4(1, 0, 0, 0)).norm(), 1e-9);
  EXPECT_LE(horizontal_gradient(coordinate_surface(4), {}).norm(), 1e-12);
  const RadialProfile fp = polynomial_profile(1.0, 0.3, 0.2);
  const ImplicitSurface S{profile_field(fp)};
  for (int n = 0; n < 50; ++n) {
    const double r = rng.uniform(0.1, 2.0);
    const HeisPoint p = on_profile(rng, fp, r);
    EXPECT_NEAR(horizontal_gradient(S, p).norm(), std::sqrt(4 * r * r + std::pow(fp.first(r), 2)), 1e-12);
  }
}

TEST(HorizontalGradient, GMatrixStructure) {
  Rng rng(42);
  const RadialProfile fp = polynomial_profile(0.8, 0.5, 0.1);
  const ScalarField u = profile_field(fp);
  for (int n = 0; n < 100; ++n) {
    const HeisPoint p = rng.point();
    const double r = p.q.norm(), tau = p.t.norm(), fr = fp.first(r) / r;
    const double t1 = p.t.x / tau, t2 = p.t.y / tau, t3 = p.t.z / tau;
    Mat4 G;
    G << -fr, 2 * t1, 2 * t2, 2 * t3,
         -2 * t1, -fr, 2 * t3, -2 * t2,
         -2 * t2, -2 * t3, -fr, 2 * t1,
         -2 * t3, 2 * t2, -2 * t1, -fr;
    const Vec4 x(p.q.w, p.q.x, p.q.y, p.q.z);
    const Vec4 a = horizontal_gradient(ImplicitSurface{u}, p);
    EXPECT_LE((a - G * x).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Characteristic, Examples) {
  const CatalogSurface plane = make_catalog_surface("hyperplane-x1");
  EXPECT_FALSE(is_characteristic(plane.surface, {}));
  const ImplicitSurface flat = coordinate_surface(4);
  EXPECT_TRUE(is_characteristic(flat, {}));
  EXPECT_FALSE(is_characteristic(flat, {Quaternion{0, 1, 0, 0}, {}}));
  const CatalogSurface par = make_catalog_surface("paraboloid-sqrt43");
  EXPECT_TRUE(is_characteristic(par.surface, {}));
  EXPECT_FALSE(is_characteristic(par.surface, par.point_at(0.5)));
}

TEST(Characteristic, OperationsRaise) {
  const ImplicitSurface flat = coordinate_surface(4);
  EXPECT_EQ(kind_of([&] { horizontal_normal(flat, {}); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([&] { hmc(flat, {}); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([&] { hmc(flat, {Quaternion{0, 0, 1e-10, 0}, {}}); }), ErrorKind::Domain);
}

TEST(Normal, UnitAndLimit) {
  Rng rng(43);
  EXPECT_LE((horizontal_normal(coordinate_surface(0), rng.point()) - Vec4(1, 0, 0, 0)).norm(), 1e-9);
  const RadialProfile fp = polynomial_profile(1.0, 0.2, 0.3);
  const ImplicitSurface S{profile_field(fp)};
  for (int n = 0; n < 50; ++n) {
    const HeisPoint p = on_profile(rng, fp, rng.uniform(0.2, 1.5));
    const Vec4 nh = horizontal_normal(S, p);
    EXPECT_NEAR(nh.norm(), 1.0, 1e-14);
    const RiemannianNormal nl = riemannian_normal(S, p, MetricParams(1e3, 1e3, 1e3));
    EXPECT_NEAR(std::sqrt(nl.horizontal.squaredNorm() + nl.vertical.squaredNorm()), 1.0, 1e-14);
    EXPECT_LE((nl.horizontal - nh).cwiseAbs().maxCoeff(), 1e-5);
    EXPECT_LE(nl.vertical.norm(), 1e-2);
  }
}

TEST(Hmc, CatalogExamples) {
  Rng rng(44);
  const CatalogSurface plane = make_catalog_surface("hyperplane-x1");
  for (int n = 0; n < 100; ++n) {
    HeisPoint p = rng.point();
    p.q.w = 0.0;
    EXPECT_NEAR(hmc(plane.surface, p), 0.0, 1e-9);
  }
  const CatalogSurface kor = make_catalog_surface("koranyi-sphere", {{"R", 1.0}});
  EXPECT_NEAR(hmc(kor.surface, kor.point_at(0.5)), 4.5, 1e-9);
  EXPECT_NEAR(hmc(kor.surface, {Quaternion{0, 0, 0.5, 0}, {0, 0, std::sqrt(1 - 0.0625)}}), 4.5, 1e-9);
  const CatalogSurface par = make_catalog_surface("paraboloid-sqrt43");
  for (int n = 0; n < 100; ++n) EXPECT_NEAR(hmc(par.surface, on_profile(rng, *par.profile, rng.uniform(0.05, 3))), 0.0, 1e-7);
}

TEST(Hmc, KoranyiSphereAcrossRadii) {
  for (double R : {0.5, 1.0, 2.0}) {
    const CatalogSurface s = make_catalog_surface("koranyi-sphere", {{"R", R}});
    for (int k = 1; k < 100; ++k) {
      const double r = R * k / 100.0;
      EXPECT_NEAR(hmc(s.surface, s.point_at(r)), 9 * r / (R * R), 1e-6);
      EXPECT_NEAR(hmc_profile(*s.profile, r), 9 * r / (R * R), 1e-6);
    }
  }
}

TEST(Hmc, SignFollowsDefiningFunction) {
  const CatalogSurface kor = make_catalog_surface("koranyi-sphere");
  ImplicitSurface neg = kor.surface;
  const ScalarField u = kor.surface.u;
  neg.u = {[u](const Vec7& x) { return -u.eval(x); }, [u](const Vec7& x) { return Vec7(-u.grad(x)); },
           [u](const Vec7& x) { return Mat7(-u.hess(x)); }};
  EXPECT_NEAR(hmc(neg, kor.point_at(0.5)), -4.5, 1e-9);
}

TEST(HmcProfile, Examples) {
  EXPECT_NEAR(hmc_profile(korany_profile(1.0), 0.5), 4.5, 1e-6);
  const CatalogSurface par = make_catalog_surface("paraboloid-sqrt43");
  Rng rng(45);
  for (int n = 0; n < 100; ++n) EXPECT_NEAR(hmc_profile(*par.profile, rng.uniform(0.01, 5)), 0.0, 1e-10);
  const double r = 1 / std::sqrt(2.0);
  const RadialProfile sphere{[](double x) { return std::sqrt(1 - x * x); }, [](double x) { return -x / std::sqrt(1 - x * x); },
                             [](double x) { return -1 / std::pow(1 - x * x, 1.5); }};
  EXPECT_NEAR(hmc_profile(sphere, r), 6.259807120445899, 1e-12);
  const double printed = euclidean_sphere_printed_display(1.0, r);
  EXPECT_GT(std::abs(printed - hmc_profile(sphere, r)), 1.0);
}

TEST(HmcProfile, Domain) {
  EXPECT_EQ(kind_of([] { hmc_profile(korany_profile(1.0), 0.0); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { hmc_profile(korany_profile(1.0), -0.5); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { hmc_profile(polynomial_profile(-1, 0, 0), 0.5); }), ErrorKind::Domain);
}

TEST(HmcProfile, AgreesWithDefinition) {
  Rng rng(46);
  for (int n = 0; n < 100; ++n) {
    const RadialProfile fp = polynomial_profile(rng.uniform(0.5, 2), rng.uniform(-0.2, 1), rng.uniform(0, 1));
    const double r = rng.uniform(0.2, 1.5);
    EXPECT_NEAR(hmc(ImplicitSurface{profile_field(fp)}, on_profile(rng, fp, r)), hmc_profile(fp, r), 1e-6);
  }
}

TEST(HmcProfile, AgreesWithBlackBoxDifferences) {
  // value-only defining function: all derivatives by finite differences
  Rng rng(47);
  const RadialProfile fp = polynomial_profile(1.0, 0.4, 0.2);
  const ScalarField u{[fp](const Vec7& x) { return Vec3(x[4], x[5], x[6]).norm() - fp.value(x.head<4>().norm()); }, nullptr,
                      nullptr};
  for (int n = 0; n < 10; ++n) {
    const double r = rng.uniform(0.3, 1.2);
    EXPECT_NEAR(hmc(ImplicitSurface{u}, on_profile(rng, fp, r)), hmc_profile(fp, r), 1e-4);
  }
}

TEST(Hmc, RotationalInvariance) {
  Rng rng(48);
  const RadialProfile fp = polynomial_profile(1.0, 0.3, 0.4);
  const ImplicitSurface S{profile_field(fp)};
  for (int n = 0; n < 50; ++n) {
    const HeisPoint p = on_profile(rng, fp, rng.uniform(0.2, 1.5));
    const double h = hmc(S, p);
    EXPECT_NEAR(hmc(S, hqgeo::apply(Rotation{rng.unit_quaternion()}, p)), h, 1e-9);
    EXPECT_NEAR(hmc(S, hqgeo::apply(Sp1Action{rng.unit_quaternion()}, p)), h, 1e-9);
  }
}

TEST(Hmc, DilationCovariance) {
  // D_delta maps the Korányi sphere of radius R onto radius delta R; H0 scales by 1/delta.
  const CatalogSurface s = make_catalog_surface("koranyi-sphere", {{"R", 1.0}});
  for (double d : {0.5, 2.0, 3.0}) {
    const CatalogSurface sd = make_catalog_surface("koranyi-sphere", {{"R", d}});
    for (double r : {0.2, 0.5, 0.9}) {
      const HeisPoint p = s.point_at(r);
      EXPECT_NEAR(hmc(sd.surface, dilate(p, d)), hmc(s.surface, p) / d, 1e-8);
    }
  }
}

TEST(Minimality, Residual) {
  const CatalogSurface par = make_catalog_surface("paraboloid-sqrt43");
  Rng rng(49);
  for (int n = 0; n < 100; ++n) EXPECT_NEAR(minimality_residual(*par.profile, rng.uniform(0.01, 3)), 0.0, 1e-10);
  const RadialProfile cone{[](double r) { return r; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
  EXPECT_NEAR(minimality_residual(cone, 1.0), 29.0, 1e-13);
  for (int n = 0; n < 200; ++n) {
    const RadialProfile fp = polynomial_profile(rng.uniform(0.5, 2), rng.uniform(-0.2, 1), rng.uniform(0, 1));
    const double r = rng.uniform(0.1, 1.5);
    const double h = hmc_profile(fp, r), m = minimality_residual(fp, r);
    EXPECT_EQ(h > 0, m > 0);
    const ProfileJet j{fp.value(r), fp.first(r), fp.second(r)};
    EXPECT_NEAR(m, h * j.f * r * std::pow(4 * r * r + j.df * j.df, 1.5), 1e-9 * (1 + std::abs(m)));
  }
}

TEST(CCSphereProfile, OnTheSphere) {
  for (double R : {0.5, 1.0, 3.0}) {
    for (int k = 1; k < 20; ++k) {
      const double r = R * k / 20.0;
      const ProfileJet j = cc_sphere_profile(R, r);
      EXPECT_GT(j.f, 0.0);
      EXPECT_NEAR(cc_distance_origin({Quaternion(r), {j.f, 0, 0}}), R, 1e-7);
    }
  }
    // square-root approach to the equator
  EXPECT_LT(cc_sphere_profile(1.0, 1.0 - 1e-9).f, 1e-4);
  EXPECT_NEAR(cc_sphere_profile(1.0, 1.0 - 1e-8).f / cc_sphere_profile(1.0, 1.0 - 1e-10).f, 10.0, 1e-2);
}

TEST(CCSphereProfile, DerivativesAndStability) {
  const double R = 1.0, r = 0.5;
  const ProfileJet j = cc_sphere_profile(R, r);
  const double h = 1e-4;
  EXPECT_NEAR(j.df, (cc_sphere_profile(R, r + h).f - cc_sphere_profile(R, r - h).f) / (2 * h), 1e-6);
  EXPECT_NEAR(j.d2f, (cc_sphere_profile(R, r + h).f - 2 * j.f + cc_sphere_profile(R, r - h).f) / (h * h), 1e-4);
  const double a = hmc_profile(cc_sphere_profile_fd(R, r, 1e-3), r), b = hmc_profile(cc_sphere_profile_fd(R, r, 5e-4), r);
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_NEAR(a, b, 1e-5);
  EXPECT_NEAR(hmc_profile(j, r), b, 1e-5);
  const CatalogSurface s = make_catalog_surface("cc-sphere");
  EXPECT_NEAR(hmc(s.surface, s.point_at(r)), hmc_profile(j, r), 1e-6);
}

TEST(CCSphereProfile, Domain) {
  EXPECT_EQ(kind_of([] { cc_sphere_profile(1.0, 0.0); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { cc_sphere_profile(1.0, 1.0); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { cc_sphere_profile(1.0, 1.5); }), ErrorKind::Domain);
}

TEST(Catalog, NamesAndErrors) {
  for (const auto& name : catalog_names()) EXPECT_NO_THROW(make_catalog_surface(name));
  EXPECT_EQ(catalog_names().size(), 5u);
  EXPECT_EQ(kind_of([] { make_catalog_surface("torus"); }), ErrorKind::Parameter);
  EXPECT_EQ(kind_of([] { make_catalog_surface("koranyi-sphere", {{"R", -1.0}}); }), ErrorKind::Parameter);
}
