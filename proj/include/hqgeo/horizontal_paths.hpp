#pragma once

#include <array>
#include <functional>

#include "hqgeo/curve.hpp"
#include "hqgeo/heis_group.hpp"

namespace hqgeo {

inline constexpr int kDefaultSegmentIntervals = 256;

/// Coefficients k_1..k_4 of the eight-segment vertical connector and the
/// corner points p_0 = O, p_1, ..., p_8 = (0, t).
struct VerticalConnectorPlan {
  std::array<double, 4> k{};
  std::array<HeisPoint, 9> corners{};
};

/// k with k1k2 + k3k4 = tau1, k1k3 - k2k4 = tau2, k2k3 + k1k4 = tau3 where tau = -t/4.
///
/// Writing tau2 + i tau3 = R e^{i phi}, z1 = k1 + i k2 = r1 e^{i phi1},
/// z2 = k3 + i k4 = (R/r1) e^{i(phi - phi1)}, the first relation becomes
/// sin(2 phi1) X^2 - 2 tau1 X + R^2 sin(2 phi - 2 phi1) = 0 with X = r1^2.
/// phi1 is scanned over 720 angles in [0, pi); the angle with the largest
/// discriminant that yields a positive root is used.
std::array<double, 4> solve_vertical_coeffs(const PureQuaternion& t);

VerticalConnectorPlan plan_vertical_connector(const std::array<double, 4>& k);

/// Horizontal path O -> (0, t): +k1 xi1, +k2 xi2, +k3 xi3, +k4 xi4, then -k1 xi1 .. -k4 xi4.
SampledCurve vertical_connector(const PureQuaternion& t, int intervals = kDefaultSegmentIntervals);
SampledCurve vertical_connector(const std::array<double, 4>& k, int intervals = kDefaultSegmentIntervals);

/// A curve in H with its derivative, lambda in [0, 1].
struct PlanarCurve {
  std::function<Quaternion(double)> position;
  std::function<Quaternion(double)> velocity;

  static PlanarCurve segment(const Quaternion& from, const Quaternion& to);
};

/// Horizontal lift of alpha starting at `start`; the vertical part solves theta(gamma') = 0:
///   beta1' = 2(a2 a1' - a1 a2' - a3 a4' + a4 a3')
///   beta2' = 2(a3 a1' - a1 a3' - a4 a2' + a2 a4')
///   beta3' = 2(a4 a1' - a1 a4' - a2 a3' + a3 a2')
/// integrated node to node with 10-point Gauss-Legendre.
SampledCurve horizontal_lift(const PlanarCurve& alpha, const HeisPoint& start, int intervals = kDefaultSegmentIntervals);

/// Horizontal path from `from` to `to`: lift of the straight segment between the
/// horizontal parts, followed by a left-translated vertical connector.
SampledCurve connect(const HeisPoint& from, const HeisPoint& to, int intervals = kDefaultSegmentIntervals);

/// l_cc = integral of |(pi o gamma)'|, composite Simpson per segment.
double length_cc(const SampledCurve& c);

}  // namespace hqgeo
