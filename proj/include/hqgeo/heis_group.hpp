#pragma once

#include <variant>

#include "hqgeo/quaternion.hpp"
#include "hqgeo/types.hpp"

namespace hqgeo {

/// Element (q, t) of the quaternionic Heisenberg group H x Im H.
struct HeisPoint {
  Quaternion q;
  PureQuaternion t;

  static HeisPoint identity() { return {}; }
  static HeisPoint from_coords(const Vec7& c);
  Vec7 coords() const;

  bool operator==(const HeisPoint&) const = default;
};

/// Positive dilation factor.
class MetricScale {
 public:
  explicit MetricScale(double delta);
  double delta() const { return delta_; }

 private:
  double delta_;
};

/// Group law: compose(a, b) = a * b = (qa + qb, ta + tb + 2 Im(qa conj(qb))).
///
/// The left operand plays the role of (q', t'). The twist term is written with
/// q' on the left so that the left-invariant fields are exactly the xi_1..xi_4
/// used throughout the library; see README for the note on the product order.
HeisPoint compose(const HeisPoint& a, const HeisPoint& b);

HeisPoint invert(const HeisPoint& p);
/// a^{-1} * b.
HeisPoint relative(const HeisPoint& a, const HeisPoint& b);

/// Maps generating the similarity group, plus the inversion.
struct LeftTranslation { HeisPoint by; };
struct Rotation { Quaternion u; };        // (q, t) -> (q u, t), |u| = 1
struct Sp1Action { Quaternion sigma; };   // (q, t) -> (sigma q, sigma t sigma^-1), |sigma| = 1
struct Inversion {};                      // (q, t) -> (-(|q|^2 - t)^-1 q, -t / (|q|^4 + |t|^2))
struct Dilation { MetricScale scale; };   // (q, t) -> (delta q, delta^2 t)

using Automorphism = std::variant<LeftTranslation, Rotation, Sp1Action, Inversion, Dilation>;

/// Throws ErrorKind::Parameter for non-unit rotation parameters and
/// ErrorKind::Domain for the inversion at the origin.
HeisPoint apply(const Automorphism& map, const HeisPoint& p);

HeisPoint dilate(const HeisPoint& p, double delta);

/// ||(q, t)||_K = (|q|^4 + |t|^2)^(1/4).
double koranyi_gauge(const HeisPoint& p);

/// d_K(a, b) = ||a^-1 * b||_K.
double koranyi_distance(const HeisPoint& a, const HeisPoint& b);

}  // namespace hqgeo
