#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hqgeo/frame.hpp"
#include "hqgeo/heis_group.hpp"
#include "hqgeo/riemannian.hpp"

namespace hqgeo {

/// S = {u = 0}. Horizontal quantities are defined where |grad_0 u| > characteristic_tolerance.
struct ImplicitSurface {
  ScalarField u;
  double characteristic_tolerance = 1e-8;
};

/// tau = f(r) with r = |q|, tau = |t|. Missing derivatives are completed by central differences.
struct RadialProfile {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;

  double value(double r) const;
  double first(double r) const;
  double second(double r) const;
};

struct ProfileJet {
  double f = 0.0, df = 0.0, d2f = 0.0;
};

/// Frame coefficients (xi_1 u, .., xi_4 u).
Vec4 horizontal_gradient(const ImplicitSurface& S, const HeisPoint& p);

bool is_characteristic(const ImplicitSurface& S, const HeisPoint& p);

/// n_H = grad_0 u / |grad_0 u|. Throws ErrorKind::Domain at characteristic points.
Vec4 horizontal_normal(const ImplicitSurface& S, const HeisPoint& p);

/// g_L unit normal: a_i / A_L on xi_i, b_j / A_L on T_j' with b_j = T_j' u.
struct RiemannianNormal {
  Vec4 horizontal;
  Vec3 vertical;
};
RiemannianNormal riemannian_normal(const ImplicitSurface& S, const HeisPoint& p, const MetricParams& L);

/// H^0 = sum_i xi_i(xi_i u / |grad_0 u|)
///     = sum_i xi_i xi_i u / A - sum_{ij} a_i a_j xi_i xi_j u / A^3,  A = |grad_0 u|.
/// Computed for u as supplied (u and -u give opposite signs).
double hmc(const ImplicitSurface& S, const HeisPoint& p);

/// Closed form for tau = f(r):
///   [-4r(2f' + r f'') - 3 f'^3 / r] / (4r^2 + f'^2)^{3/2} + 8 r^2 / (f sqrt(4r^2 + f'^2)).
double hmc_profile(const ProfileJet& j, double r);
double hmc_profile(const RadialProfile& fp, double r);

/// -4 r^2 f (2f' + r f'') - 3 f f'^3 + 8 r^3 (4r^2 + f'^2); vanishes exactly where hmc_profile does.
double minimality_residual(const ProfileJet& j, double r);
double minimality_residual(const RadialProfile& fp, double r);

/// u = tau - f(r) with analytic gradient and Hessian built from the profile derivatives.
ScalarField profile_field(const RadialProfile& fp);

/// The point (r, f(r) i) on the profile surface.
HeisPoint profile_point(const RadialProfile& fp, double r);

/// CC sphere of radius R as a profile: r = (2/c) sin(cR/2), tau = kappa (cR - sin cR)/c^2,
/// c in (0, 2 pi / R), with f' and f'' by implicit differentiation in c.
ProfileJet cc_sphere_profile(double R, double r, Convention conv = Convention::Corrected);

/// Same jet with f', f'' from central differences in c with step h (diagnostic path).
ProfileJet cc_sphere_profile_fd(double R, double r, double h, Convention conv = Convention::Corrected);

RadialProfile cc_sphere_radial_profile(double R, Convention conv = Convention::Corrected);

// ---------------------------------------------------------------------------
// Named surfaces.

struct CatalogSurface {
  std::string name;
  ImplicitSurface surface;
  std::optional<RadialProfile> profile;
  double radius = 1.0;  // R where applicable
  /// Point on S parametrized by r (profile point, or (0, r, 0, 0; 0) on the hyperplane).
  std::function<HeisPoint(double)> point_at;
  /// Closed-form reference for H^0 at r, where one is known.
  std::function<std::optional<double>(double)> reference;
  std::string reference_label;
};

/// "hyperplane-x1", "paraboloid-sqrt43", "euclidean-sphere", "koranyi-sphere", "cc-sphere".
/// params: "R" for the spheres (default 1). Unknown names throw ErrorKind::Parameter.
CatalogSurface make_catalog_surface(const std::string& name, const std::map<std::string, double>& params = {},
                                    Convention conv = Convention::Corrected);

const std::vector<std::string>& catalog_names();

/// The Euclidean-sphere display as printed: (3(4 + R^2) + 8 r^2 (4 tau^2 + 3)) / (8 r (tau^2 + 1)^{3/2}).
double euclidean_sphere_printed_display(double R, double r);

}  // namespace hqgeo
