#pragma once

#include <array>
#include <string>
#include <vector>

#include "hqgeo/curve.hpp"
#include "hqgeo/heis_group.hpp"
#include "hqgeo/types.hpp"

namespace hqgeo {

/// Which constants to use where the published closed forms disagree with the
/// horizontality constraint. Corrected is the default everywhere; AsPublished
/// exists only to reproduce the printed values for comparison.
enum class Convention { Corrected, AsPublished };

/// Coefficient kappa of |C|^2 f(|C_L| l)/|C_L|^3 in the vertical part of a geodesic.
constexpr double vertical_kappa(Convention c) { return c == Convention::Corrected ? 2.0 : 4.0; }

/// Scales (L1, L2, L3) of the vertical directions; {xi_i, T_a / L_a} is g_L-orthonormal.
class MetricParams {
 public:
  MetricParams(double l1, double l2, double l3);
  static MetricParams symmetric(double l) { return {l, l, l}; }

  double operator[](int a) const { return l_[a]; }
  bool is_symmetric() const;
  double sum_of_squares() const { return l_[0] * l_[0] + l_[1] * l_[1] + l_[2] * l_[2]; }

 private:
  std::array<double, 3> l_;
};

// ---------------------------------------------------------------------------
// Connection and curvature in the orthonormal frame E = {xi_1..xi_4, T_1'..T_3'}.
// Vectors are constant coefficient 7-vectors in that frame.

/// nabla[x][y] = nabla_{E_x} E_y, from Koszul's formula
///   g(nabla_X Y, Z) = 1/2 (g([X,Y],Z) - g([X,Z],Y) - g([Y,Z],X)).
struct ConnectionTable {
  std::array<std::array<Vec7, 7>, 7> nabla;
  std::array<std::array<Vec7, 7>, 7> bracket;  // [E_x, E_y]

  Vec7 covariant(const Vec7& X, const Vec7& Y) const;
  Vec7 lie(const Vec7& X, const Vec7& Y) const;
};

ConnectionTable connection_coeffs(const MetricParams& L);

/// R(X,Y)Z = nabla_Y nabla_X Z - nabla_X nabla_Y Z + nabla_[X,Y] Z.
Vec7 riemann(const ConnectionTable& conn, const Vec7& X, const Vec7& Y, const Vec7& Z);
Vec7 riemann(const MetricParams& L, const Vec7& X, const Vec7& Y, const Vec7& Z);

/// Frame labels "xi1".."xi4", "T1'".."T3'".
std::string frame_label(int index0);

struct SectionalEntry {
  int u = 0, v = 0;        // 0-based frame indices, u < v
  double value = 0.0;      // g_L(R(E_u,E_v)E_u, E_v)
  bool has_published = false;
  double published = 0.0;  // tabulated value, when the table lists this plane
};

struct CurvatureReport {
  MetricParams L{1, 1, 1};
  std::vector<SectionalEntry> sectional;  // the 21 frame planes
  std::array<double, 7> ricci_trace{};    // sum_V K(U, V)
  std::array<double, 7> ricci_mean{};     // ricci_trace / 6
  std::array<double, 7> ricci_published{};
  double scalar_trace = 0.0;              // sum_U ricci_trace(U)
  double scalar_paper_convention = 0.0;   // mean of ricci_mean over the 7 directions
  double scalar_published = 0.0;

  bool sectional_match = false;           // every tabulated plane agrees
  std::array<bool, 7> ricci_mean_match{};
  std::array<bool, 7> ricci_trace_match{};
  bool scalar_match = false;              // scalar_paper_convention vs published
  bool ricci_vertical_mismatch_flag = false;
};

CurvatureReport curvature_report(const MetricParams& L, double tol = 1e-10);

// ---------------------------------------------------------------------------
// g_L geodesics.

/// gamma(l) = start * (alpha(l), beta(l)) with
///   alpha(l) = -C_L^{-1} (1 - exp(C_L l)) C,
///   beta_a(l) = (l / (4 L_a^2) + kappa |C|^2 f(|C_L| l) / |C_L|^3) C_L^a,
/// where C_L = -(C_L^1 i + C_L^2 j + C_L^3 k) and f(x) = x - sin x.
struct GLGeodesic {
  PureQuaternion CL;  // the quaternion C_L
  Quaternion C;       // alpha'(0)
  MetricParams L{1, 1, 1};
  HeisPoint start;

  /// Components C_L^a (= -CL).
  Vec3 constants() const { return {-CL.x, -CL.y, -CL.z}; }
};

HeisPoint gl_geodesic_eval(const GLGeodesic& g, double lam, Convention conv = Convention::Corrected);
Vec7 gl_geodesic_velocity(const GLGeodesic& g, double lam, Convention conv = Convention::Corrected);

/// sqrt(|C|^2 + sum (C_L^a)^2 / (16 L_a^2)).
double gl_length(const GLGeodesic& g);

/// |alpha'|^2 + sum L_a^2 theta_a(gamma')^2 at a tangent vector w based at p.
double gl_energy_density(const MetricParams& L, const HeisPoint& p, const Vec7& w);

SampledCurve gl_geodesic_sample(const GLGeodesic& g, int intervals, Convention conv = Convention::Corrected);

/// g_L geodesic from the origin to target (symmetric L only), first arc |C_L| < 2 pi.
/// Throws Domain for the origin, Parameter for non-symmetric L, OutOfRange when no
/// root of the C_L relation lies in (0, 2 pi).
GLGeodesic solve_gl_bvp(const HeisPoint& target, const MetricParams& L, Convention conv = Convention::Corrected);

}  // namespace hqgeo
