#include "hqgeo/hypersurface.hpp"

#include <cmath>

#include "hqgeo/error.hpp"
#include "hqgeo/numerics.hpp"

namespace hqgeo {

namespace {

double fd_step(double base, double r) { return base * std::max(1.0, std::abs(r)); }

void require_positive_radius(double r) {
  if (!(r > 0.0)) fail(ErrorKind::Domain, "profile radius must be positive");
}

}  // namespace

double RadialProfile::value(double r) const {
  const double v = f(r);
  if (!std::isfinite(v)) fail(ErrorKind::Evaluation, "non-finite profile value");
  return v;
}

double RadialProfile::first(double r) const {
  if (df) return df(r);
  const double h = fd_step(1e-5, r);
  return (value(r + h) - value(r - h)) / (2 * h);
}

double RadialProfile::second(double r) const {
  if (d2f) return d2f(r);
  const double h = fd_step(1e-4, r);
  return (value(r + h) - 2 * value(r) + value(r - h)) / (h * h);
}

Vec4 horizontal_gradient(const ImplicitSurface& S, const HeisPoint& p) {
  const Vec4 a = frame_matrix(p).topRows<4>() * S.u.grad(p.coords());
  for (int i = 0; i < 4; ++i)
    if (!std::isfinite(a[i])) fail(ErrorKind::Evaluation, "non-finite horizontal gradient");
  return a;
}

bool is_characteristic(const ImplicitSurface& S, const HeisPoint& p) {
  return horizontal_gradient(S, p).norm() <= S.characteristic_tolerance;
}

Vec4 horizontal_normal(const ImplicitSurface& S, const HeisPoint& p) {
  const Vec4 a = horizontal_gradient(S, p);
  const double A = a.norm();
  if (A <= S.characteristic_tolerance) fail(ErrorKind::Domain, "characteristic point: horizontal normal undefined");
  return a / A;
}

RiemannianNormal riemannian_normal(const ImplicitSurface& S, const HeisPoint& p, const MetricParams& L) {
  const Vec7 g = S.u.grad(p.coords());
  const Vec4 a = frame_matrix(p).topRows<4>() * g;
  Vec3 b;
  for (int j = 0; j < 3; ++j) b[j] = g[4 + j] / L[j];
  const double AL = std::sqrt(a.squaredNorm() + b.squaredNorm());
  if (!(AL > 0.0)) fail(ErrorKind::Domain, "vanishing gradient: normal undefined");
  return {a / AL, b / AL};
}

double hmc(const ImplicitSurface& S, const HeisPoint& p) {
  const HorizontalJet jet = horizontal_jet(S.u, p);
  const double A = jet.a.norm();
  if (A <= S.characteristic_tolerance) fail(ErrorKind::Domain, "characteristic point: horizontal mean curvature undefined");
  const double value = jet.m.trace() / A - jet.a.dot(jet.m * jet.a) / (A * A * A);
  if (!std::isfinite(value)) fail(ErrorKind::Evaluation, "non-finite horizontal mean curvature");
  return value;
}

double hmc_profile(const ProfileJet& j, double r) {
  require_positive_radius(r);
  if (!(j.f > 0.0)) fail(ErrorKind::Domain, "profile value f(r) must be positive");
  const double g2 = 4 * r * r + j.df * j.df;
  const double g = std::sqrt(g2);
  return (-4 * r * (2 * j.df + r * j.d2f) - 3 * j.df * j.df * j.df / r) / (g2 * g) + 8 * r * r / (j.f * g);
}

double hmc_profile(const RadialProfile& fp, double r) {
  require_positive_radius(r);
  return hmc_profile(ProfileJet{fp.value(r), fp.first(r), fp.second(r)}, r);
}

double minimality_residual(const ProfileJet& j, double r) {
  return -4 * r * r * j.f * (2 * j.df + r * j.d2f) - 3 * j.f * j.df * j.df * j.df +
         8 * r * r * r * (4 * r * r + j.df * j.df);
}

double minimality_residual(const RadialProfile& fp, double r) {
  return minimality_residual(ProfileJet{fp.value(r), fp.first(r), fp.second(r)}, r);
}

ScalarField profile_field(const RadialProfile& fp) {
  ScalarField u;
  u.value = [fp](const Vec7& c) { return c.tail<3>().norm() - fp.value(c.head<4>().norm()); };
  u.gradient = [fp](const Vec7& c) {
    Vec7 g = Vec7::Zero();
    const double r = c.head<4>().norm(), tau = c.tail<3>().norm();
    if (r > 0.0) g.head<4>() = -fp.first(r) * c.head<4>() / r;
    if (tau > 0.0) g.tail<3>() = c.tail<3>() / tau;
    return g;
  };
  u.hessian = [fp](const Vec7& c) {
    Mat7 H = Mat7::Zero();
    const Vec4 x = c.head<4>();
    const Vec3 t = c.tail<3>();
    const double r = x.norm(), tau = t.norm();
    if (r > 0.0) {
      const double d1 = fp.first(r), d2 = fp.second(r);
      const Mat4 xx = x * x.transpose() / (r * r);
      H.topLeftCorner<4, 4>() = -(d2 * xx + d1 / r * (Mat4::Identity() - xx));
    } else {
      H.topLeftCorner<4, 4>() = -fp.second(0.0) * Mat4::Identity();
    }
    if (tau > 0.0) H.bottomRightCorner<3, 3>() = (Eigen::Matrix3d::Identity() - t * t.transpose() / (tau * tau)) / tau;
    return H;
  };
  return u;
}

HeisPoint profile_point(const RadialProfile& fp, double r) { return {Quaternion(r), {fp.value(r), 0.0, 0.0}}; }

namespace {

struct CCSphereCurve {
  double R, kappa;
  double r(double x) const { return R * sinc(0.5 * x); }
  double tau(double x) const { return kappa * R * R * x * xms_over_cube(x); }
  double r1(double x) const { return R * (std::cos(0.5 * x) / x - 2 * std::sin(0.5 * x) / (x * x)); }
  double r2(double x) const {
    return R * (-std::sin(0.5 * x) / (2 * x) - 2 * std::cos(0.5 * x) / (x * x) + 4 * std::sin(0.5 * x) / (x * x * x));
  }
  double tau1(double x) const {
    return kappa * R * R * (one_minus_cos(x) / (x * x) - 2 * x_minus_sin(x) / (x * x * x));
  }
  double tau2(double x) const {
    return kappa * R * R *
           (std::sin(x) / (x * x) - 4 * one_minus_cos(x) / (x * x * x) + 6 * x_minus_sin(x) / (x * x * x * x));
  }
};

// x = c R in (0, 2 pi) with r(x) = r_target; r(x) decreases from R to 0.
double cc_sphere_parameter(const CCSphereCurve& cs, double r_target) {
  return bisect([&](double x) { return cs.r(x) - r_target; }, 0.0, kTwoPi);
}

void check_cc_sphere_args(double R, double r) {
  if (!(R > 0.0)) fail(ErrorKind::Parameter, "CC sphere radius must be positive");
  if (!(r > 0.0 && r < R)) fail(ErrorKind::Domain, "CC sphere profile needs 0 < r < R");
}

}  // namespace

ProfileJet cc_sphere_profile(double R, double r, Convention conv) {
  check_cc_sphere_args(R, r);
  const CCSphereCurve cs{R, vertical_kappa(conv)};
  const double x = cc_sphere_parameter(cs, r);
  const double rx = cs.r1(x), rxx = cs.r2(x), tx = cs.tau1(x), txx = cs.tau2(x);
  return {cs.tau(x), tx / rx, (txx * rx - tx * rxx) / (rx * rx * rx)};
}

ProfileJet cc_sphere_profile_fd(double R, double r, double h, Convention conv) {
  check_cc_sphere_args(R, r);
  const CCSphereCurve cs{R, vertical_kappa(conv)};
  const double x = cc_sphere_parameter(cs, r);
  const double rx = (cs.r(x + h) - cs.r(x - h)) / (2 * h);
  const double tx = (cs.tau(x + h) - cs.tau(x - h)) / (2 * h);
  const double rxx = (cs.r(x + h) - 2 * cs.r(x) + cs.r(x - h)) / (h * h);
  const double txx = (cs.tau(x + h) - 2 * cs.tau(x) + cs.tau(x - h)) / (h * h);
  return {cs.tau(x), tx / rx, (txx * rx - tx * rxx) / (rx * rx * rx)};
}

RadialProfile cc_sphere_radial_profile(double R, Convention conv) {
  return {[R, conv](double r) { return cc_sphere_profile(R, r, conv).f; },
          [R, conv](double r) { return cc_sphere_profile(R, r, conv).df; },
          [R, conv](double r) { return cc_sphere_profile(R, r, conv).d2f; }};
}

double euclidean_sphere_printed_display(double R, double r) {
  const double tau2 = R * R - r * r;
  return (3 * (4 + R * R) + 8 * r * r * (4 * tau2 + 3)) / (8 * r * std::pow(tau2 + 1, 1.5));
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"hyperplane-x1", "paraboloid-sqrt43", "euclidean-sphere",
                                              "koranyi-sphere", "cc-sphere"};
  return names;
}

CatalogSurface make_catalog_surface(const std::string& name, const std::map<std::string, double>& params,
                                    Convention conv) {
  CatalogSurface s;
  s.name = name;
  const auto it = params.find("R");
  s.radius = it == params.end() ? 1.0 : it->second;
  if (!(s.radius > 0.0) || !std::isfinite(s.radius)) fail(ErrorKind::Parameter, "surface parameter R must be positive");
  for (const auto& [key, value] : params)
    if (key != "R") fail(ErrorKind::Parameter, "unknown surface parameter '" + key + "'");
  const double R = s.radius;

  if (name == "hyperplane-x1") {
    s.surface.u.value = [](const Vec7& c) { return c[0]; };
    s.surface.u.gradient = [](const Vec7&) { return Vec7::Unit(0); };
    s.surface.u.hessian = [](const Vec7&) { return Mat7::Zero(); };
    s.point_at = [](double r) { return HeisPoint{{0.0, r, 0.0, 0.0}, {}}; };
    s.reference = [](double) { return std::optional<double>(0.0); };
    s.reference_label = "horizontally minimal";
  } else if (name == "paraboloid-sqrt43") {
    const double k = std::sqrt(4.0 / 3.0);
    s.profile = RadialProfile{[k](double r) { return k * r * r; }, [k](double r) { return 2 * k * r; },
                              [k](double) { return 2 * k; }};
    s.surface.u = profile_field(*s.profile);
    s.reference = [](double) { return std::optional<double>(0.0); };
    s.reference_label = "horizontally minimal";
  } else if (name == "euclidean-sphere") {
    s.profile = RadialProfile{[R](double r) { return std::sqrt(R * R - r * r); },
                              [R](double r) { return -r / std::sqrt(R * R - r * r); },
                              [R](double r) {
                                const double f = std::sqrt(R * R - r * r);
                                return -1.0 / f - r * r / (f * f * f);
                              }};
    s.surface.u.value = [R](const Vec7& c) { return c.squaredNorm() - R * R; };
    s.surface.u.gradient = [](const Vec7& c) { return Vec7(2.0 * c); };
    s.surface.u.hessian = [](const Vec7&) { return Mat7(2.0 * Mat7::Identity()); };
    s.reference = [](double) { return std::optional<double>(); };
  } else if (name == "koranyi-sphere") {
    s.profile = RadialProfile{[R](double r) { return std::sqrt(R * R * R * R - r * r * r * r); },
                              [R](double r) { return -2 * r * r * r / std::sqrt(R * R * R * R - r * r * r * r); },
                              [R](double r) {
                                const double f = std::sqrt(R * R * R * R - r * r * r * r);
                                const double df = -2 * r * r * r / f;
                                return (-6 * r * r * f + 2 * r * r * r * df) / (f * f);
                              }};
    s.surface.u.value = [R](const Vec7& c) {
      const double r2 = c.head<4>().squaredNorm();
      return r2 * r2 + c.tail<3>().squaredNorm() - R * R * R * R;
    };
    s.surface.u.gradient = [](const Vec7& c) {
      Vec7 g;
      g << 4 * c.head<4>().squaredNorm() * c.head<4>(), 2 * c.tail<3>();
      return g;
    };
    s.surface.u.hessian = [](const Vec7& c) {
      Mat7 H = Mat7::Zero();
      const Vec4 x = c.head<4>();
      H.topLeftCorner<4, 4>() = 4 * x.squaredNorm() * Mat4::Identity() + 8 * x * x.transpose();
      H.bottomRightCorner<3, 3>() = 2 * Eigen::Matrix3d::Identity();
      return H;
    };
    s.reference = [R](double r) { return std::optional<double>(9 * r / (R * R)); };
    s.reference_label = "9r/R^2";
  } else if (name == "cc-sphere") {
    s.profile = cc_sphere_radial_profile(R, conv);
    s.surface.u = profile_field(*s.profile);
    s.reference = [](double) { return std::optional<double>(); };
  } else {
    fail(ErrorKind::Parameter, "unknown surface '" + name + "'");
  }
  if (s.profile) {
    const RadialProfile prof = *s.profile;
    s.point_at = [prof](double r) { return profile_point(prof, r); };
  }
  return s;
}

}  // namespace hqgeo
