#pragma once

#include <functional>

#include "hqgeo/curve.hpp"
#include "hqgeo/heis_group.hpp"
#include "hqgeo/types.hpp"

namespace hqgeo {

/// Tangent vector in the left-invariant frame {xi_1..xi_4, T_1..T_3} at base.
struct FrameVector {
  HeisPoint base;
  Vec4 h = Vec4::Zero();
  Vec3 v = Vec3::Zero();

  Vec7 frame_coeffs() const;
  /// sum h_i xi_i(base) + sum v_a T_a in coordinates.
  Vec7 to_coords() const;
  static FrameVector from_coords(const HeisPoint& base, const Vec7& w);
};

/// Rows are the coordinate components of xi_1..xi_4, T_1..T_3 at p.
Mat7 frame_matrix(const HeisPoint& p);

/// (theta_1(w), theta_2(w), theta_3(w)) at p for a coordinate tangent vector w.
Vec3 theta_eval(const HeisPoint& p, const Vec7& w);

/// [E_i, E_j] for frame indices 1..7 (xi_1..xi_4, T_1..T_3), as constant frame
/// coefficients. Computed by differentiating the coefficient polynomials.
Vec7 lie_bracket(int i, int j);

/// J_a (a = 1..3) acting on horizontal frame coefficients.
Vec4 j_apply(int a, const Vec4& h);

/// Scalar field on R^7 with optional analytic derivatives.
///
/// Missing derivatives fall back to central differences: first derivatives with
/// step fd_step * max(1, |x_k|), second derivatives with fd_step2 * max(1, |x_k|)
/// and one Richardson step-halving.
struct ScalarField {
  std::function<double(const Vec7&)> value;
  std::function<Vec7(const Vec7&)> gradient;
  std::function<Mat7(const Vec7&)> hessian;
  double fd_step = 1e-5;
  double fd_step2 = 1e-4;

  double eval(const Vec7& x) const;
  Vec7 grad(const Vec7& x) const;
  Mat7 hess(const Vec7& x) const;
};

/// Finite-difference Hessian with the Richardson diagnostic: max |D(h) - D(h/2)|.
struct HessianEstimate {
  Mat7 value;
  double step_halving_delta = 0.0;
};
HessianEstimate fd_hessian(const ScalarField& u, const Vec7& x);
Vec7 fd_gradient(const ScalarField& u, const Vec7& x);

/// xi_i u at p, i in 1..4.
double xi_derivative(const ScalarField& u, int i, const HeisPoint& p);

/// xi_i (xi_j u) at p, i, j in 1..4.
double xi_second_derivative(const ScalarField& u, int i, int j, const HeisPoint& p);

/// All horizontal first and second derivatives at once: a_i = xi_i u,
/// m(i, j) = xi_i xi_j u (0-based indices).
struct HorizontalJet {
  Vec4 a;
  Mat4 m;
};
HorizontalJet horizontal_jet(const ScalarField& u, const HeisPoint& p);

/// max over samples of |theta(velocity)|. Throws ErrorKind::Input if a sample has no velocity.
double horizontality_residual(const SampledCurve& c);

}  // namespace hqgeo
