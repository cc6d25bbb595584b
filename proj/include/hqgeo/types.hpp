#pragma once

#include <Eigen/Core>

namespace hqgeo {

using Vec3 = Eigen::Matrix<double, 3, 1>;
using Vec4 = Eigen::Matrix<double, 4, 1>;
using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat4 = Eigen::Matrix<double, 4, 4>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

/// Coordinate indices into a Vec7: x1..x4 are 0..3, t1..t3 are 4..6.
inline constexpr int kT0 = 4;

}  // namespace hqgeo
