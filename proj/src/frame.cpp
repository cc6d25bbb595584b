#include "hqgeo/frame.hpp"

#include <array>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "hqgeo/error.hpp"

namespace hqgeo {

namespace {

// Coordinate rows of xi_1..xi_4, T_1..T_3 at horizontal position x.
Mat7 frame_at(const Vec4& x) {
  Mat7 f = Mat7::Identity();
  // xi_1 = dx1 + 2x2 dt1 + 2x3 dt2 + 2x4 dt3
  f(0, 4) = 2 * x[1];
  f(0, 5) = 2 * x[2];
  f(0, 6) = 2 * x[3];
  // xi_2 = dx2 - 2x1 dt1 - 2x4 dt2 + 2x3 dt3
  f(1, 4) = -2 * x[0];
  f(1, 5) = -2 * x[3];
  f(1, 6) = 2 * x[2];
  // xi_3 = dx3 + 2x4 dt1 - 2x1 dt2 - 2x2 dt3
  f(2, 4) = 2 * x[3];
  f(2, 5) = -2 * x[0];
  f(2, 6) = -2 * x[1];
  // xi_4 = dx4 - 2x3 dt1 + 2x2 dt2 - 2x1 dt3
  f(3, 4) = -2 * x[2];
  f(3, 5) = 2 * x[1];
  f(3, 6) = -2 * x[0];
  return f;
}

// d(coefficient row j, column l)/dx_k. Coefficients are affine in x, so a unit
// difference is exact.
struct CoeffJacobian {
  std::array<Mat7, 4> d;  // d[k](j, l)
  CoeffJacobian() {
    const Mat7 f0 = frame_at(Vec4::Zero());
    for (int k = 0; k < 4; ++k) d[k] = frame_at(Vec4::Unit(k)) - f0;
  }
};

const CoeffJacobian& coeff_jacobian() {
  static const CoeffJacobian jac;
  return jac;
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) fail(ErrorKind::Evaluation, std::string("non-finite ") + what);
}

double fd_h(double step, double x) { return step * std::max(1.0, std::abs(x)); }

}  // namespace

Vec7 FrameVector::frame_coeffs() const {
  Vec7 c;
  c << h, v;
  return c;
}

Vec7 FrameVector::to_coords() const { return frame_matrix(base).transpose() * frame_coeffs(); }

FrameVector FrameVector::from_coords(const HeisPoint& base, const Vec7& w) {
  const Vec7 c = frame_matrix(base).transpose().partialPivLu().solve(w);
  return {base, c.head<4>(), c.tail<3>()};
}

Mat7 frame_matrix(const HeisPoint& p) { return frame_at(p.coords().head<4>()); }

Vec3 theta_eval(const HeisPoint& p, const Vec7& w) {
  const double x1 = p.q.w, x2 = p.q.x, x3 = p.q.y, x4 = p.q.z;
  const double d1 = w[0], d2 = w[1], d3 = w[2], d4 = w[3];
  return {w[4] - 2 * x2 * d1 + 2 * x1 * d2 + 2 * x3 * d4 - 2 * x4 * d3,
          w[5] - 2 * x3 * d1 + 2 * x1 * d3 + 2 * x4 * d2 - 2 * x2 * d4,
          w[6] - 2 * x4 * d1 + 2 * x1 * d4 + 2 * x2 * d3 - 2 * x3 * d2};
}

Vec7 lie_bracket(int i, int j) {
  if (i < 1 || i > 7 || j < 1 || j > 7) fail(ErrorKind::Parameter, "frame index must be in 1..7");
  const auto& jac = coeff_jacobian();
  const Mat7 f0 = frame_at(Vec4::Zero());
  const Vec7 X = f0.row(i - 1).transpose();
  const Vec7 Y = f0.row(j - 1).transpose();
  // [X, Y]^l = X^k d_k Y^l - Y^k d_k X^l; only x-derivatives are non-zero.
  Vec7 out = Vec7::Zero();
  for (int k = 0; k < 4; ++k) out += X[k] * jac.d[k].row(j - 1).transpose() - Y[k] * jac.d[k].row(i - 1).transpose();
  // Express in the frame at the origin (identity there, but keep it explicit).
  return f0.transpose().partialPivLu().solve(out);
}

Vec4 j_apply(int a, const Vec4& h) {
  // J_1: xi1->xi2, xi2->-xi1, xi3->xi4, xi4->-xi3
  // J_2: xi1->xi3, xi3->-xi1, xi4->xi2, xi2->-xi4
  // J_3: xi1->xi4, xi4->-xi1, xi2->xi3, xi3->-xi2
  switch (a) {
    case 1: return {-h[1], h[0], -h[3], h[2]};
    case 2: return {-h[2], h[3], h[0], -h[1]};
    case 3: return {-h[3], -h[2], h[1], h[0]};
    default: fail(ErrorKind::Parameter, "J index must be in 1..3");
  }
}

double ScalarField::eval(const Vec7& x) const {
  const double v = value(x);
  check_finite(v, "field value");
  return v;
}

Vec7 fd_gradient(const ScalarField& u, const Vec7& x) {
  Vec7 g;
  for (int k = 0; k < 7; ++k) {
    const double h = fd_h(u.fd_step, x[k]);
    Vec7 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    g[k] = (u.eval(xp) - u.eval(xm)) / (2 * h);
  }
  return g;
}

namespace {

Mat7 central_hessian(const ScalarField& u, const Vec7& x, double scale) {
  Mat7 H;
  const double f0 = u.eval(x);
  for (int k = 0; k < 7; ++k) {
    const double hk = fd_h(u.fd_step2 * scale, x[k]);
    Vec7 xp = x, xm = x;
    xp[k] += hk;
    xm[k] -= hk;
    H(k, k) = (u.eval(xp) - 2 * f0 + u.eval(xm)) / (hk * hk);
    for (int l = k + 1; l < 7; ++l) {
      const double hl = fd_h(u.fd_step2 * scale, x[l]);
      Vec7 pp = x, pm = x, mp = x, mm = x;
      pp[k] += hk; pp[l] += hl;
      pm[k] += hk; pm[l] -= hl;
      mp[k] -= hk; mp[l] += hl;
      mm[k] -= hk; mm[l] -= hl;
      H(k, l) = H(l, k) = (u.eval(pp) - u.eval(pm) - u.eval(mp) + u.eval(mm)) / (4 * hk * hl);
    }
  }
  return H;
}

}  // namespace

HessianEstimate fd_hessian(const ScalarField& u, const Vec7& x) {
  const Mat7 coarse = central_hessian(u, x, 1.0);
  const Mat7 fine = central_hessian(u, x, 0.5);
  return {(4.0 * fine - coarse) / 3.0, (fine - coarse).cwiseAbs().maxCoeff()};
}

Vec7 ScalarField::grad(const Vec7& x) const {
  if (!gradient) return fd_gradient(*this, x);
  Vec7 g = gradient(x);
  for (int k = 0; k < 7; ++k) check_finite(g[k], "gradient");
  return g;
}

Mat7 ScalarField::hess(const Vec7& x) const {
  if (!hessian) return fd_hessian(*this, x).value;
  Mat7 H = hessian(x);
  for (int k = 0; k < 49; ++k) check_finite(H.data()[k], "hessian");
  return H;
}

HorizontalJet horizontal_jet(const ScalarField& u, const HeisPoint& p) {
  const Vec7 x = p.coords();
  const Mat7 f = frame_matrix(p);
  const Vec7 g = u.grad(x);
  const Mat7 H = u.hess(x);
  const auto& jac = coeff_jacobian();
  HorizontalJet jet;
  jet.a = f.topRows<4>() * g;
  // xi_i(xi_j u) = sum_k c_ik (d_k c_j) . grad u + c_i^T H c_j
  const Eigen::Matrix<double, 4, 7> c = f.topRows<4>();
  jet.m = c * H * c.transpose();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) jet.m(i, j) += c(i, k) * jac.d[k].row(j).dot(g);
  for (int k = 0; k < 4; ++k) check_finite(jet.a[k], "horizontal derivative");
  return jet;
}

double xi_derivative(const ScalarField& u, int i, const HeisPoint& p) {
  if (i < 1 || i > 4) fail(ErrorKind::Parameter, "horizontal index must be in 1..4");
  const double v = frame_matrix(p).row(i - 1).dot(u.grad(p.coords()));
  check_finite(v, "horizontal derivative");
  return v;
}

double xi_second_derivative(const ScalarField& u, int i, int j, const HeisPoint& p) {
  if (i < 1 || i > 4 || j < 1 || j > 4) fail(ErrorKind::Parameter, "horizontal index must be in 1..4");
  return horizontal_jet(u, p).m(i - 1, j - 1);
}

double horizontality_residual(const SampledCurve& c) {
  double worst = 0.0;
  for (const auto& seg : c.segments()) {
    for (const auto& s : seg) {
      if (!s.velocity) fail(ErrorKind::Input, "curve has no velocities");
      worst = std::max(worst, theta_eval(s.point, *s.velocity).norm());
    }
  }
  return worst;
}

}  // namespace hqgeo
