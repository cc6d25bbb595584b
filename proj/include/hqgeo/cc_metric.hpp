#pragma once

#include <cstdint>
#include <vector>

#include "hqgeo/curve.hpp"
#include "hqgeo/heis_group.hpp"
#include "hqgeo/riemannian.hpp"

namespace hqgeo {

/// Unit-speed CC geodesic from the origin, lambda = arclength:
///   alpha(l) = -A^{-1} (1 - exp(A l)) B,   beta(l) = -(kappa/|A|^3) f(|A| l) A.
/// A = 0 is the straight line (B l, 0).
struct CCGeodesic {
  PureQuaternion A;
  Quaternion B{1.0};
  double length = 0.0;  // arclength to the end point of interest (R)
};

/// Throws ErrorKind::Parameter when |B| != 1.
HeisPoint cc_geodesic_eval(const PureQuaternion& A, const Quaternion& B, double lam,
                           Convention conv = Convention::Corrected);
Vec7 cc_geodesic_velocity(const PureQuaternion& A, const Quaternion& B, double lam,
                          Convention conv = Convention::Corrected);

/// Samples of gamma(R l'), l' in [0, 1], velocities with respect to l'.
SampledCurve cc_geodesic_sample(const CCGeodesic& g, int intervals, Convention conv = Convention::Corrected);

/// First-arc geodesic from the origin reaching `target` at arclength d_cc(O, target).
/// `b_norm_defect` receives | |B| - 1 | before normalization when non-null.
CCGeodesic solve_cc_geodesic(const HeisPoint& target, Convention conv = Convention::Corrected,
                             double* b_norm_defect = nullptr);

/// Root in [0, 2 pi] of (1 - cos x)/(x - sin x) = ratio (corrected) or
/// (1 - cos x)/(2 (x - sin x)) = ratio (as published). ratio = +inf gives 0,
/// ratio = 0 gives 2 pi. Negative ratio throws ErrorKind::Domain.
double x0_solve(double ratio, Convention conv = Convention::Corrected);

/// Left side of the x0 equation, series-safe near 0.
double x0_equation_lhs(double x, Convention conv = Convention::Corrected);

/// d_cc / d_K as a function of x0: (x^4 / (4 (1-cos x)^2 + c f(x)^2))^(1/4), c = 4 (corrected) or 16.
double ratio_of_x0(double x0, Convention conv = Convention::Corrected);

double cc_distance_origin(const HeisPoint& p, Convention conv = Convention::Corrected);
double cc_distance(const HeisPoint& a, const HeisPoint& b, Convention conv = Convention::Corrected);

/// d_cc(O, p) / d_K(O, p); throws ErrorKind::Domain at the origin.
double comparison_ratio(const HeisPoint& p, Convention conv = Convention::Corrected);

/// n points on the CC sphere of radius R: |A| R uniform on [0, 2 pi], directions of A
/// and B drawn from a seeded generator.
std::vector<HeisPoint> cc_sphere_sample(double R, std::size_t n, std::uint64_t seed = 42,
                                        Convention conv = Convention::Corrected);

/// n points on the Korányi sphere ||p||_K = R.
std::vector<HeisPoint> koranyi_sphere_sample(double R, std::size_t n, std::uint64_t seed = 42);

}  // namespace hqgeo
