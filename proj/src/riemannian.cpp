#include "hqgeo/riemannian.hpp"

#include <cmath>

#include "hqgeo/error.hpp"
#include "hqgeo/frame.hpp"
#include "hqgeo/numerics.hpp"

namespace hqgeo {

namespace {

// Frame index scale: E_x = s_x F_x with F = {xi_i, T_a}.
double frame_scale(const MetricParams& L, int x) { return x < 4 ? 1.0 : 1.0 / L[x - 4]; }

}  // namespace

MetricParams::MetricParams(double l1, double l2, double l3) : l_{l1, l2, l3} {
  for (double l : l_)
    if (!(l > 0.0) || !std::isfinite(l)) fail(ErrorKind::Parameter, "metric scales L_a must be positive and finite");
}

bool MetricParams::is_symmetric() const {
  const double m = std::max({l_[0], l_[1], l_[2]});
  return std::abs(l_[0] - l_[1]) <= 1e-12 * m && std::abs(l_[0] - l_[2]) <= 1e-12 * m;
}

Vec7 ConnectionTable::covariant(const Vec7& X, const Vec7& Y) const {
  Vec7 out = Vec7::Zero();
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y)
      if (X[x] != 0.0 && Y[y] != 0.0) out += X[x] * Y[y] * nabla[x][y];
  return out;
}

Vec7 ConnectionTable::lie(const Vec7& X, const Vec7& Y) const {
  Vec7 out = Vec7::Zero();
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y)
      if (X[x] != 0.0 && Y[y] != 0.0) out += X[x] * Y[y] * bracket[x][y];
  return out;
}

ConnectionTable connection_coeffs(const MetricParams& L) {
  ConnectionTable t;
  for (int x = 0; x < 7; ++x) {
    for (int y = 0; y < 7; ++y) {
      // [E_x, E_y] = s_x s_y [F_x, F_y]; re-express T_a components on T_a' = T_a / L_a.
      Vec7 b = frame_scale(L, x) * frame_scale(L, y) * lie_bracket(x + 1, y + 1);
      for (int a = 0; a < 3; ++a) b[4 + a] *= L[a];
      t.bracket[x][y] = b;
    }
  }
  auto c = [&](int x, int y, int z) { return t.bracket[x][y][z]; };
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y)
      for (int z = 0; z < 7; ++z) t.nabla[x][y][z] = 0.5 * (c(x, y, z) - c(x, z, y) - c(y, z, x));
  return t;
}

Vec7 riemann(const ConnectionTable& conn, const Vec7& X, const Vec7& Y, const Vec7& Z) {
  return conn.covariant(Y, conn.covariant(X, Z)) - conn.covariant(X, conn.covariant(Y, Z)) +
         conn.covariant(conn.lie(X, Y), Z);
}

Vec7 riemann(const MetricParams& L, const Vec7& X, const Vec7& Y, const Vec7& Z) {
  return riemann(connection_coeffs(L), X, Y, Z);
}

std::string frame_label(int index0) {
  if (index0 < 4) return "xi" + std::to_string(index0 + 1);
  return "T" + std::to_string(index0 - 3) + "'";
}

CurvatureReport curvature_report(const MetricParams& L, double tol) {
  CurvatureReport rep;
  rep.L = L;
  const ConnectionTable conn = connection_coeffs(L);
  const double sum_l2 = L.sum_of_squares();
  auto close = [tol](double a, double b) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); };

  // Horizontal planes {xi_i, xi_j} curve like -12 L_a^2 where [xi_i, xi_j] = +-4 T_a.
  auto published_plane = [&](int u, int v, double& out) {
    if (u < 4 && v < 4) {
      const Vec7 b = lie_bracket(u + 1, v + 1);
      for (int a = 0; a < 3; ++a)
        if (b[4 + a] != 0.0) out = -12.0 * L[a] * L[a];
      return true;
    }
    if (u < 4 && v >= 4) {
      out = 4.0 * L[v - 4] * L[v - 4];
      return true;
    }
    return false;
  };

  std::array<std::array<double, 7>, 7> K{};
  rep.sectional_match = true;
  for (int u = 0; u < 7; ++u) {
    for (int v = u + 1; v < 7; ++v) {
      const Vec7 U = Vec7::Unit(u), V = Vec7::Unit(v);
      SectionalEntry e;
      e.u = u;
      e.v = v;
      e.value = riemann(conn, U, V, U).dot(V);
      e.has_published = published_plane(u, v, e.published);
      if (e.has_published && !close(e.value, e.published)) rep.sectional_match = false;
      K[u][v] = K[v][u] = e.value;
      rep.sectional.push_back(e);
    }
  }

  double mean_sum = 0.0;
  for (int u = 0; u < 7; ++u) {
    double tr = 0.0;
    for (int v = 0; v < 7; ++v)
      if (v != u) tr += K[u][v];
    rep.ricci_trace[u] = tr;
    rep.ricci_mean[u] = tr / 6.0;
    rep.ricci_published[u] = u < 4 ? -4.0 / 3.0 * sum_l2 : 2.0 * L[u - 4] * L[u - 4];
    rep.ricci_mean_match[u] = close(rep.ricci_mean[u], rep.ricci_published[u]);
    rep.ricci_trace_match[u] = close(rep.ricci_trace[u], rep.ricci_published[u]);
    rep.scalar_trace += tr;
    mean_sum += rep.ricci_mean[u];
  }
  rep.scalar_paper_convention = mean_sum / 7.0;
  rep.scalar_published = -10.0 / 21.0 * sum_l2;
  rep.scalar_match = close(rep.scalar_paper_convention, rep.scalar_published);
  for (int a = 4; a < 7; ++a)
    if (!rep.ricci_mean_match[a] && !rep.ricci_trace_match[a]) rep.ricci_vertical_mismatch_flag = true;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// alpha(l) = l [sinc(s l) + C_L (l/2) sinc^2(s l / 2)] C, s = |C_L|; no division by s.
Quaternion alpha_factor(const PureQuaternion& cl, double lam) {
  const double x = cl.norm() * lam;
  const double h = sinc(0.5 * x);
  return (Quaternion(sinc(x)) + Quaternion(cl) * (0.5 * lam * h * h)) * lam;
}

}  // namespace

HeisPoint gl_geodesic_eval(const GLGeodesic& g, double lam, Convention conv) {
  const double s = g.CL.norm();
  const Vec3 ca = g.constants();
  const double kappa = vertical_kappa(conv);
  const double c2 = g.C.norm2();
  HeisPoint local;
  local.q = alpha_factor(g.CL, lam) * g.C;
  const double tail = kappa * c2 * lam * lam * lam * xms_over_cube(s * lam);
  for (int a = 0; a < 3; ++a) local.t[a] = (lam / (4.0 * g.L[a] * g.L[a]) + tail) * ca[a];
  return compose(g.start, local);
}

Vec7 gl_geodesic_velocity(const GLGeodesic& g, double lam, Convention conv) {
  const double s = g.CL.norm();
  const Vec3 ca = g.constants();
  const double kappa = vertical_kappa(conv);
  const double c2 = g.C.norm2();
  const Quaternion qdot = exp_pure(g.CL * lam) * g.C;
  // d/dl [f(s l)/s^3] = (1 - cos(s l))/s^2 = (l^2 / 2) sinc^2(s l / 2)
  const double h = sinc(0.5 * s * lam);
  const double tail = kappa * c2 * 0.5 * lam * lam * h * h;
  Vec7 w;
  w.head<4>() << qdot.w, qdot.x, qdot.y, qdot.z;
  for (int a = 0; a < 3; ++a) w[4 + a] = (1.0 / (4.0 * g.L[a] * g.L[a]) + tail) * ca[a];
  // push forward through the left translation by start
  const PureQuaternion twist = 2.0 * (g.start.q * qdot.conj()).im();
  w[4] += twist.x;
  w[5] += twist.y;
  w[6] += twist.z;
  return w;
}

double gl_length(const GLGeodesic& g) {
  const Vec3 ca = g.constants();
  double v = g.C.norm2();
  for (int a = 0; a < 3; ++a) v += ca[a] * ca[a] / (16.0 * g.L[a] * g.L[a]);
  return std::sqrt(v);
}

double gl_energy_density(const MetricParams& L, const HeisPoint& p, const Vec7& w) {
  const Vec3 th = theta_eval(p, w);
  double e = w.head<4>().squaredNorm();
  for (int a = 0; a < 3; ++a) e += L[a] * L[a] * th[a] * th[a];
  return e;
}

SampledCurve gl_geodesic_sample(const GLGeodesic& g, int intervals, Convention conv) {
  if (intervals < 2) fail(ErrorKind::Parameter, "need at least two intervals");
  SampledCurve::Segment seg;
  seg.reserve(intervals + 1);
  for (int n = 0; n <= intervals; ++n) {
    const double lam = n == intervals ? 1.0 : static_cast<double>(n) / intervals;
    seg.push_back({lam, gl_geodesic_eval(g, lam, conv), gl_geodesic_velocity(g, lam, conv)});
  }
  return SampledCurve({std::move(seg)});
}

GLGeodesic solve_gl_bvp(const HeisPoint& target, const MetricParams& L, Convention conv) {
  if (!L.is_symmetric()) fail(ErrorKind::Parameter, "solve_gl_bvp requires L1 = L2 = L3");
  const double q2 = target.q.norm2();
  const double tn = target.t.norm();
  if (q2 == 0.0 && tn == 0.0) fail(ErrorKind::Domain, "solve_gl_bvp: target is the origin");
  const double l2 = L[0] * L[0];
  GLGeodesic g;
  g.L = L;
  if (tn == 0.0) {
    g.C = target.q;
    return g;
  }
  if (q2 == 0.0) {
    g.CL = target.t * (-4.0 * l2);
    return g;
  }
  // |t| - s/(4L^2) = (kappa/2) |q|^2 f(s) / (1 - cos s), increasing in s on (0, 2 pi).
  const double half_kappa = 0.5 * vertical_kappa(conv);
  auto residual = [&](double s) {
    return half_kappa * q2 * x_minus_sin(s) + (s / (4.0 * l2) - tn) * one_minus_cos(s);
  };
  // Multiplied through by (1 - cos s) > 0 to keep the residual finite at the bracket ends.
  constexpr double eps = 1e-12;
  constexpr int cells = 2048;
  double lo = eps, flo = residual(lo);
  double root = -1.0;
  for (int c = 1; c <= cells && root < 0; ++c) {
    const double hi = eps + (kTwoPi - 2 * eps) * c / cells;
    const double fhi = residual(hi);
    if (flo == 0.0) root = lo;
    else if ((flo < 0) != (fhi < 0)) root = bisect(residual, lo, hi);
    lo = hi;
    flo = fhi;
  }
  if (root < 0) fail(ErrorKind::OutOfRange, "target is not reached by a first-arc g_L geodesic");
  g.CL = target.t * (-root / tn);
  g.C = inverse(alpha_factor(g.CL, 1.0)) * target.q;
  return g;
}

}  // namespace hqgeo
