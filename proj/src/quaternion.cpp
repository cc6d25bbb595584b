#include "hqgeo/quaternion.hpp"

#include <ostream>

#include "hqgeo/error.hpp"

namespace hqgeo {

Quaternion inverse(const Quaternion& q) {
  const double n2 = q.norm2();
  if (!(n2 > 0.0)) fail(ErrorKind::Domain, "inverse of the zero quaternion");
  return q.conj() / n2;
}

double sinc(double x) {
  if (std::abs(x) < 1e-8) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
  }
  return std::sin(x) / x;
}

Quaternion exp_pure(const PureQuaternion& v) {
  const double n = v.norm();
  const double s = sinc(n);
  return {std::cos(n), v.x * s, v.y * s, v.z * s};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

std::ostream& operator<<(std::ostream& os, const PureQuaternion& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

}  // namespace hqgeo
