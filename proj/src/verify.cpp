#include "hqgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "hqgeo/cc_metric.hpp"
#include "hqgeo/error.hpp"
#include "hqgeo/frame.hpp"
#include "hqgeo/horizontal_paths.hpp"
#include "hqgeo/hypersurface.hpp"
#include "hqgeo/numerics.hpp"
#include "hqgeo/riemannian.hpp"

namespace hqgeo {

namespace {

double point_distance(const HeisPoint& a, const HeisPoint& b) { return (a.coords() - b.coords()).norm(); }

Vec7 unit(int index0) {
  Vec7 e = Vec7::Zero();
  e[index0] = 1.0;
  return e;
}

class Recorder {
 public:
  Recorder(VerifyReport& rep, std::string suite) : rep_(rep), suite_(std::move(suite)) {}

  void max(const std::string& name, double err, double bound) {
    rep_.checks.push_back({suite_, name, "max", err, bound, std::isfinite(err) && err <= bound});
  }
  void min(const std::string& name, double margin, double bound) {
    rep_.checks.push_back({suite_, name, "min", margin, bound, std::isfinite(margin) && margin >= bound});
  }
  void measure(const std::string& name, double value, const std::string& note) {
    rep_.measurements.push_back({name, value, note});
  }

 private:
  VerifyReport& rep_;
  std::string suite_;
};

// ---------------------------------------------------------------------------

void suite_algebra(Recorder& rec, Rng& rng) {
  double assoc = 0.0, ident = 0.0, inv = 0.0, hom = 0.0, dil = 0.0;
  for (int n = 0; n < 200; ++n) {
    const HeisPoint a = rng.point(), b = rng.point(), c = rng.point();
    assoc = std::max(assoc, point_distance(compose(compose(a, b), c), compose(a, compose(b, c))));
    ident = std::max({ident, point_distance(compose(a, HeisPoint::identity()), a),
                      point_distance(compose(HeisPoint::identity(), a), a)});
    inv = std::max({inv, point_distance(compose(a, invert(a)), HeisPoint::identity()),
                    point_distance(compose(invert(a), a), HeisPoint::identity())});
    const Rotation rot{rng.unit_quaternion()};
    const Sp1Action sp{rng.unit_quaternion()};
    for (const Automorphism m : {Automorphism{rot}, Automorphism{sp}}) {
      hom = std::max(hom, point_distance(hqgeo::apply(m, compose(a, b)), compose(hqgeo::apply(m, a), hqgeo::apply(m, b))));
    }
    const double delta = rng.uniform(0.2, 3.0);
    dil = std::max(dil, point_distance(dilate(compose(a, b), delta), compose(dilate(a, delta), dilate(b, delta))));
  }
  rec.max("group associativity", assoc, 1e-12);
  rec.max("group identity", ident, 1e-15);
  rec.max("group inverse", inv, 1e-13);
  rec.max("rotation and Sp(1) are automorphisms", hom, 1e-12);
  rec.max("dilation is an automorphism", dil, 1e-11);

  // [xi_i, xi_j] = -4 T_a with (i, j, a) from the structure table.
  struct Rel { int i, j, a; };
  const Rel table[] = {{1, 2, 1}, {3, 4, 1}, {1, 3, 2}, {4, 2, 2}, {1, 4, 3}, {2, 3, 3}};
  double br = 0.0;
  for (const auto& r : table) {
    Vec7 expect = Vec7::Zero();
    expect[3 + r.a] = -4.0;
    br = std::max(br, (lie_bracket(r.i, r.j) - expect).cwiseAbs().maxCoeff());
    br = std::max(br, (lie_bracket(r.j, r.i) + expect).cwiseAbs().maxCoeff());
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      if (i > 4 || j > 4) br = std::max(br, lie_bracket(i, j).cwiseAbs().maxCoeff());
    }
  rec.max("bracket table", br, 1e-12);

  // Left translation pushes xi_i(p) to xi_i(g p); the map is polynomial of degree 2,
  // so the central difference is exact up to rounding.
  double li = 0.0;
  for (int n = 0; n < 50; ++n) {
    const HeisPoint g = rng.point(), p = rng.point();
    const Mat7 fp = frame_matrix(p), fgp = frame_matrix(compose(g, p));
    const double h = 1e-3;
    Mat7 jac;
    for (int k = 0; k < 7; ++k) {
      const Vec7 x = p.coords();
      jac.col(k) = (compose(g, HeisPoint::from_coords(x + h * unit(k))).coords() -
                    compose(g, HeisPoint::from_coords(x - h * unit(k))).coords()) / (2 * h);
    }
    for (int i = 0; i < 7; ++i) li = std::max(li, (jac * fp.row(i).transpose() - fgp.row(i).transpose()).norm());
  }
  rec.max("frame left invariance", li, 1e-8);

  double tri = 0.0;
  for (int n = 0; n < 2000; ++n) {
    const HeisPoint a = rng.point(), b = rng.point(), c = rng.point();
    tri = std::max(tri, koranyi_distance(a, c) - koranyi_distance(a, b) - koranyi_distance(b, c));
  }
  rec.max("Koranyi triangle inequality excess", std::max(tri, 0.0), 1e-9);

  double inv_dev = 0.0, invol = 0.0;
  for (int n = 0; n < 500; ++n) {
    const HeisPoint a = rng.point(), b = rng.point();
    const HeisPoint ia = hqgeo::apply(Inversion{}, a), ib = hqgeo::apply(Inversion{}, b);
    invol = std::max(invol, point_distance(hqgeo::apply(Inversion{}, ia), a) / (1.0 + koranyi_gauge(a)));
    const double ratio = koranyi_distance(ia, ib) * koranyi_gauge(a) * koranyi_gauge(b) / koranyi_distance(a, b);
    inv_dev = std::max(inv_dev, std::abs(ratio - 1.0));
  }
  rec.max("inversion is an involution", invol, 1e-10);
  rec.measure("inversion: max |d_K(Ia,Ib) |a|_K |b|_K / d_K(a,b) - 1|", inv_dev, "500 random pairs");
}

// ---------------------------------------------------------------------------

void suite_geodesics(Recorder& rec, Rng& rng) {
  // CC geodesics: horizontal, unit speed, lambda is distance.
  double hres = 0.0, speed = 0.0, arc = 0.0;
  for (int n = 0; n < 50; ++n) {
    const PureQuaternion A = rng.unit_pure() * rng.uniform(0.1, 6.0);
    const Quaternion B = rng.unit_quaternion();
    const double R = rng.uniform(0.05, 0.99) * kTwoPi / A.norm();
    const SampledCurve c = cc_geodesic_sample({A, B, R}, 64);
    hres = std::max(hres, horizontality_residual(c));
    for (double lam : {0.0, 0.3 * R, R}) {
      speed = std::max(speed, std::abs(cc_geodesic_velocity(A, B, lam).head<4>().norm() - 1.0));
    }
    arc = std::max(arc, std::abs(cc_distance_origin(cc_geodesic_eval(A, B, R)) - R) / std::max(1.0, R));
  }
  rec.max("CC geodesic horizontality", hres, 1e-10);
  rec.max("CC geodesic unit speed", speed, 1e-10);
  rec.max("CC geodesic arclength equals distance", arc, 1e-8);

  // Test circle A = 2 pi i, B = 1: the corrected vertical part agrees with the horizontal
  // lift of alpha; the printed one is off by a factor of 2.
  {
    const PureQuaternion A{kTwoPi, 0, 0};
    const Quaternion B{1.0};
    const PlanarCurve alpha{[&](double l) { return cc_geodesic_eval(A, B, l).q; },
                            [&](double l) {
                              const Vec7 v = cc_geodesic_velocity(A, B, l);
                              return Quaternion{v[0], v[1], v[2], v[3]};
                            }};
    const SampledCurve lift = horizontal_lift(alpha, HeisPoint::identity(), 512);
    const double lifted = lift.end().t.x;
    const double corrected = cc_geodesic_eval(A, B, 1.0).t.x;
    const double printed = cc_geodesic_eval(A, B, 1.0, Convention::AsPublished).t.x;
    rec.max("test circle: corrected vertical endpoint vs lift", std::abs(corrected - lifted), 1e-10);
    rec.max("test circle: printed/lift endpoint ratio - 2", std::abs(printed / lifted - 2.0), 1e-9);
    double bad = 0.0;
    for (int k = 0; k <= 16; ++k) {
      const double l = k / 16.0;
      bad = std::max(bad, theta_eval(cc_geodesic_eval(A, B, l, Convention::AsPublished),
                                     cc_geodesic_velocity(A, B, l, Convention::AsPublished)).norm());
    }
    rec.min("test circle: printed constant violates horizontality", bad, 1e-3);
  }

  // g_L geodesics: theta_a constant, second-order system, BVP round trip.
  double theta = 0.0, second = 0.0, rt = 0.0;
  for (int n = 0; n < 50; ++n) {
    const MetricParams L(rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0));
    GLGeodesic g{rng.unit_pure() * rng.uniform(0.1, 6.0), rng.quaternion(), L, rng.point(0.5)};
    const Vec3 Ca = g.constants();
    for (int k = 0; k <= 20; ++k) {
      const double l = k / 20.0;
      const Vec3 th = theta_eval(gl_geodesic_eval(g, l), gl_geodesic_velocity(g, l));
      for (int a = 0; a < 3; ++a) theta = std::max(theta, std::abs(th[a] - Ca[a] / (4 * L[a] * L[a])));
      const double h = 1e-4;
      const Vec7 vp = gl_geodesic_velocity(g, l + h), vm = gl_geodesic_velocity(g, l - h), v0 = gl_geodesic_velocity(g, l);
      const Quaternion acc{(vp[0] - vm[0]) / (2 * h), (vp[1] - vm[1]) / (2 * h), (vp[2] - vm[2]) / (2 * h),
                           (vp[3] - vm[3]) / (2 * h)};
      const Quaternion rhs = Quaternion(g.CL) * Quaternion{v0[0], v0[1], v0[2], v0[3]};
      second = std::max(second, (acc - rhs).norm() / (1.0 + rhs.norm()));
    }
  }
  for (int n = 0; n < 100; ++n) {
    const MetricParams L = MetricParams::symmetric(rng.uniform(0.3, 3.0));
    const GLGeodesic g{rng.unit_pure() * rng.uniform(0.05, kTwoPi - 0.1), rng.quaternion(), L, {}};
    const GLGeodesic s = solve_gl_bvp(gl_geodesic_eval(g, 1.0), L);
    rt = std::max({rt, (s.CL - g.CL).norm(), (s.C - g.C).norm()});
  }
  rec.max("g_L geodesic theta constancy", theta, 1e-9);
  rec.max("g_L geodesic second-order residual", second, 1e-6);
  rec.max("g_L BVP round trip", rt, 1e-7);

  // Spheres, poles, ratio bounds.
  double sph = 0.0;
  for (double R : {0.1, 1.0, 10.0}) {
    for (const auto& p : cc_sphere_sample(R, 200, static_cast<std::uint64_t>(rng.uniform() * 1e9)))
      sph = std::max(sph, std::abs(cc_distance_origin(p) - R));
  }
  rec.max("CC sphere samples at distance R", sph, 1e-7);
  double eq = 0.0, pole = 0.0, pole_pub = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = rng.quaternion();
    const PureQuaternion t = rng.pure();
    eq = std::max(eq, std::abs(cc_distance_origin({q, {}}) - q.norm()));
    pole = std::max(pole, std::abs(cc_distance_origin({{}, t}) - std::sqrt(kPi * t.norm())));
    pole_pub = std::max(pole_pub, std::abs(cc_distance_origin({{}, t}, Convention::AsPublished) -
                                           std::sqrt(kPi * t.norm() / 2.0)));
  }
  rec.max("d_cc(O,(q,0)) = |q|", eq, 0.0);
  rec.max("d_cc(O,(0,t)) = sqrt(pi |t|)", pole, 1e-9);
  rec.max("printed constants give sqrt(pi |t| / 2)", pole_pub, 1e-9);
  double lo = 1e300, hi = 0.0;
  for (int n = 0; n < 2000; ++n) {
    const double r = comparison_ratio(rng.point());
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  rec.min("comparison ratio lower bound (ratio - 1)", lo - 1.0, -1e-9);
  rec.max("comparison ratio upper bound (ratio - sqrt(pi))", std::max(hi - std::sqrt(kPi), 0.0), 1e-9);
  rec.measure("comparison ratio: sweep minimum", lo, "");
  rec.measure("comparison ratio: sweep maximum", hi, "");

  // Horizontal connectivity.
  double endp = 0.0, hor = 0.0, bil = 0.0;
  for (int n = 0; n < 100; ++n) {
    const HeisPoint a = rng.point(), b = rng.point();
    const SampledCurve c = connect(a, b);
    endp = std::max({endp, point_distance(c.start(), a), point_distance(c.end(), b)});
    hor = std::max(hor, horizontality_residual(c));
  }
  for (int n = 0; n < 500; ++n) {
    const PureQuaternion t = rng.pure(2.0);
    const auto k = solve_vertical_coeffs(t);
    const PureQuaternion tau = t * -0.25;
    bil = std::max({bil, std::abs(k[0] * k[1] + k[2] * k[3] - tau.x), std::abs(k[0] * k[2] - k[1] * k[3] - tau.y),
                    std::abs(k[1] * k[2] + k[0] * k[3] - tau.z)});
  }
  rec.max("connect endpoint error", endp, 1e-8);
  rec.max("connect horizontality residual", hor, 1e-8);
  rec.max("vertical coefficients bilinear relations", bil, 1e-10);
}

// ---------------------------------------------------------------------------

double sectional_expected(const MetricParams& L, int u, int v) {
  if (u >= 4 && v >= 4) return 0.0;
  if (u < 4 && v >= 4) return 4.0 * L[v - 4] * L[v - 4];
  // horizontal plane {xi_u, xi_v}: pairs (12, 34) -> L1, (13, 24) -> L2, (14, 23) -> L3
  static const int which[4][4] = {{-1, 0, 1, 2}, {0, -1, 2, 1}, {1, 2, -1, 0}, {2, 1, 0, -1}};
  const double l = L[which[u][v]];
  return -12.0 * l * l;
}

void suite_curvature(Recorder& rec, Rng& rng) {
  double sec = 0.0, rxi = 0.0, tors = 0.0, flag_missing = 0.0;
  for (int n = 0; n < 100; ++n) {
    const MetricParams L(rng.uniform(0.1, 4.0), rng.uniform(0.1, 4.0), rng.uniform(0.1, 4.0));
    const CurvatureReport rep = curvature_report(L);
    for (const auto& e : rep.sectional) sec = std::max(sec, std::abs(e.value - sectional_expected(L, e.u, e.v)));
    for (int u = 0; u < 4; ++u) rxi = std::max(rxi, std::abs(rep.ricci_mean[u] + 4.0 / 3.0 * L.sum_of_squares()));
    if (!rep.ricci_vertical_mismatch_flag) flag_missing = 1.0;
    const ConnectionTable conn = connection_coeffs(L);
    for (int x = 0; x < 7; ++x)
      for (int y = 0; y < 7; ++y) {
        tors = std::max(tors, (conn.nabla[x][y] - conn.nabla[y][x] - conn.bracket[x][y]).cwiseAbs().maxCoeff());
        for (int z = 0; z < 7; ++z)
          tors = std::max(tors, std::abs(conn.nabla[x][y][z] + conn.nabla[x][z][y]));
      }
  }
  const CurvatureReport one = curvature_report(MetricParams(1, 1, 1));
  rec.max("sectional table (100 random L)", sec, 1e-10);
  rec.max("K(xi1, xi2) = -12 at L = (1,1,1)", std::abs(one.sectional.front().value + 12.0), 1e-12);
  rec.max("connection torsion-free and metric", tors, 1e-12);
  rec.max("mean Ricci on xi = -4/3 sum L^2", rxi, 1e-10);
  rec.max("vertical Ricci mismatch flagged", flag_missing, 0.0);
}

// ---------------------------------------------------------------------------

void suite_hmc(Recorder& rec, Rng& rng) {
  {
    const CatalogSurface s = make_catalog_surface("hyperplane-x1");
    double e = 0.0;
    for (int n = 0; n < 100; ++n) {
      HeisPoint p = rng.point();
      p.q.w = 0.0;
      e = std::max(e, std::abs(hmc(s.surface, p)));
    }
    rec.max("hyperplane x1 = 0 is minimal", e, 1e-9);
  }
  {
    const CatalogSurface s = make_catalog_surface("paraboloid-sqrt43");
    double e = 0.0;
    for (int n = 0; n < 100; ++n) {
      const double r = rng.uniform(0.1, 2.0);
      const HeisPoint p{rng.unit_quaternion() * r, rng.unit_pure() * s.profile->value(r)};
      e = std::max(e, std::abs(hmc(s.surface, p)));
    }
    rec.max("paraboloid tau = sqrt(4/3) r^2 is minimal", e, 1e-7);
  }
  {
    double e = 0.0;
    for (double R : {0.5, 1.0, 2.0}) {
      const CatalogSurface s = make_catalog_surface("koranyi-sphere", {{"R", R}});
      for (int k = 1; k < 50; ++k) {
        const double r = R * k / 50.0;
        e = std::max(e, std::abs(hmc(s.surface, s.point_at(r)) - 9.0 * r / (R * R)));
      }
    }
    rec.max("Koranyi sphere H0 = 9r/R^2", e, 1e-6);
  }
  {
    double e = 0.0, sign = 0.0;
    for (int n = 0; n < 100; ++n) {
      const double a = rng.uniform(0.5, 2.0), b = rng.uniform(-0.2, 1.0), c = rng.uniform(0.0, 1.0);
      const RadialProfile fp{[=](double r) { return a + b * r * r + c * r * r * r * r; },
                             [=](double r) { return 2 * b * r + 4 * c * r * r * r; },
                             [=](double r) { return 2 * b + 12 * c * r * r; }};
      const double r = rng.uniform(0.2, 1.5);
      const double formula = hmc_profile(fp, r);
      const HeisPoint p{rng.unit_quaternion() * r, rng.unit_pure() * fp.value(r)};
      e = std::max(e, std::abs(hmc(ImplicitSurface{profile_field(fp)}, p) - formula) / std::max(1.0, std::abs(formula)));
      if ((minimality_residual(fp, r) > 0) != (formula > 0)) sign = 1.0;
    }
    rec.max("definition vs profile formula (100 random profiles)", e, 1e-6);
    rec.max("minimality residual sign matches H0", sign, 0.0);
  }
  {
    const double R = 1.0, r = 0.5;
    const ProfileJet j = cc_sphere_profile(R, r);
    const HeisPoint p{Quaternion(r), PureQuaternion{j.f, 0, 0}};
    rec.max("CC sphere profile lies on the sphere", std::abs(cc_distance_origin(p) - R), 1e-7);
    const double h1 = hmc_profile(cc_sphere_profile_fd(R, r, 1e-3), r);
    const double h2 = hmc_profile(cc_sphere_profile_fd(R, r, 5e-4), r);
    rec.max("CC sphere H0 stable under step halving", std::abs(h1 - h2), 1e-5);
    rec.max("CC sphere H0 analytic vs difference jet", std::abs(hmc_profile(j, r) - h2), 1e-5);
    rec.measure("CC sphere H0 at R = 1, r = 1/2", hmc_profile(j, r), "");
  }
  {
    const CatalogSurface s = make_catalog_surface("euclidean-sphere");
    const double r = 1.0 / std::sqrt(2.0);
    const double f = std::sqrt(1.0 - r * r);
    const ProfileJet j{f, -r / f, -1.0 / (f * f * f)};
    const double def = hmc(s.surface, HeisPoint{Quaternion(r), PureQuaternion{f, 0, 0}});
    rec.max("Euclidean sphere: definition vs profile formula", std::abs(def - hmc_profile(j, r)), 1e-6);
  }
}

}  // namespace

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"all", "algebra", "geodesics", "curvature", "hmc"};
  return names;
}

std::vector<Discrepancy> discrepancy_report() {
  std::vector<Discrepancy> out;
  out.push_back({"vertical coefficient kappa", vertical_kappa(Convention::Corrected),
                 vertical_kappa(Convention::AsPublished),
                 "printed value violates horizontality of the geodesics"});
  out.push_back({"x0 for |q|^2/|t| = 2/pi", x0_solve(2.0 / kPi), x0_solve(2.0 / kPi, Convention::AsPublished),
                 "printed x0 equation carries an extra factor 2"});
  const HeisPoint pole{{}, {1.0, 0, 0}};
  out.push_back({"d_cc(O, (0, i))", cc_distance_origin(pole), cc_distance_origin(pole, Convention::AsPublished),
                 "sqrt(pi) vs sqrt(pi/2)"});
  {
    const PureQuaternion A{kTwoPi, 0, 0};
    out.push_back({"test circle vertical endpoint t1", cc_geodesic_eval(A, Quaternion(1.0), 1.0).t.x,
                   cc_geodesic_eval(A, Quaternion(1.0), 1.0, Convention::AsPublished).t.x, "A = 2 pi i, B = 1"});
  }
  const CurvatureReport rep = curvature_report(MetricParams(1, 1, 1));
  out.push_back({"mean Ricci T1' at L = (1,1,1)", rep.ricci_mean[4], rep.ricci_published[4],
                 "trace value " + io::format_number(rep.ricci_trace[4])});
  out.push_back({"scalar curvature (mean of mean Ricci) at L = (1,1,1)", rep.scalar_paper_convention,
                 rep.scalar_published, "double trace " + io::format_number(rep.scalar_trace)});
  {
    const double r = 1.0 / std::sqrt(2.0), f = std::sqrt(1.0 - r * r);
    out.push_back({"Euclidean sphere H0 at R = 1, r = 2^-1/2", hmc_profile(ProfileJet{f, -r / f, -1.0 / (f * f * f)}, r),
                   euclidean_sphere_printed_display(1.0, r), "printed display disagrees with the profile formula"});
  }
  return out;
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    fail(ErrorKind::Parameter, "unknown verify suite '" + suite + "'");
  VerifyReport rep;
  rep.suite = suite;
  rep.seed = seed;
  const std::pair<const char*, std::function<void(Recorder&, Rng&)>> parts[] = {
      {"algebra", suite_algebra}, {"geodesics", suite_geodesics}, {"curvature", suite_curvature}, {"hmc", suite_hmc}};
  std::uint64_t offset = 0;
  for (const auto& [name, fn] : parts) {
    // each suite gets its own stream so a single suite reproduces its slice of "all"
    ++offset;
    if (suite != "all" && suite != name) continue;
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + offset);
    Recorder rec(rep, name);
    fn(rec, rng);
  }
  rep.discrepancies = discrepancy_report();
  return rep;
}

std::string verify_table(const VerifyReport& rep) {
  std::string out;
  char line[512];
  for (const auto& c : rep.checks) {
    std::snprintf(line, sizeof line, "%-4s  %-10s  %-55s  %s %.3e  (%s %.1e)\n", c.pass ? "PASS" : "FAIL", c.suite.c_str(),
                  c.name.c_str(), c.mode == "max" ? "err" : "val", c.measured, c.mode == "max" ? "<=" : ">=", c.bound);
    out += line;
  }
  if (!rep.measurements.empty()) out += "\nmeasurements\n";
  for (const auto& m : rep.measurements) {
    std::snprintf(line, sizeof line, "  %-60s  %.12g%s%s\n", m.name.c_str(), m.value, m.note.empty() ? "" : "  ",
                  m.note.c_str());
    out += line;
  }
  out += "\ndiscrepancies (computed vs printed)\n";
  for (const auto& d : rep.discrepancies) {
    std::snprintf(line, sizeof line, "  %-55s  %.12g  vs  %.12g  (%s)\n", d.name.c_str(), d.computed, d.published,
                  d.note.c_str());
    out += line;
  }
  std::snprintf(line, sizeof line, "\n%zu checks, %d failures (suite %s, seed %llu)\n", rep.checks.size(), rep.failures(),
                rep.suite.c_str(), static_cast<unsigned long long>(rep.seed));
  out += line;
  return out;
}

io::Json verify_json(const VerifyReport& rep) {
  io::Json checks = io::Json::array(), meas = io::Json::array(), disc = io::Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"mode", c.mode}, {"measured", c.measured},
                      {"bound", c.bound}, {"pass", c.pass}});
  for (const auto& m : rep.measurements) meas.push_back({{"name", m.name}, {"value", m.value}, {"note", m.note}});
  for (const auto& d : rep.discrepancies)
    disc.push_back({{"name", d.name}, {"computed", d.computed}, {"published", d.published}, {"note", d.note}});
  return io::document("verify", {{"suite", rep.suite},
                                 {"seed", rep.seed},
                                 {"failures", rep.failures()},
                                 {"checks", checks},
                                 {"measurements", meas},
                                 {"discrepancies", disc}});
}

}  // namespace hqgeo
