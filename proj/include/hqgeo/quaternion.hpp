#pragma once

#include <array>
#include <cmath>
#include <iosfwd>

namespace hqgeo {

/// Pure (imaginary) quaternion x i + y j + z k. Doubles as an R^3 vector.
struct PureQuaternion {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr PureQuaternion() = default;
  constexpr PureQuaternion(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  double operator[](int a) const { return a == 0 ? x : (a == 1 ? y : z); }
  double& operator[](int a) { return a == 0 ? x : (a == 1 ? y : z); }

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  PureQuaternion operator+(const PureQuaternion& o) const { return {x + o.x, y + o.y, z + o.z}; }
  PureQuaternion operator-(const PureQuaternion& o) const { return {x - o.x, y - o.y, z - o.z}; }
  PureQuaternion operator-() const { return {-x, -y, -z}; }
  PureQuaternion operator*(double s) const { return {x * s, y * s, z * s}; }
  PureQuaternion operator/(double s) const { return {x / s, y / s, z / s}; }
  PureQuaternion& operator+=(const PureQuaternion& o) { x += o.x; y += o.y; z += o.z; return *this; }

  bool operator==(const PureQuaternion&) const = default;
};

inline PureQuaternion operator*(double s, const PureQuaternion& v) { return v * s; }

/// Quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}
  constexpr Quaternion(const PureQuaternion& v) : w(0.0), x(v.x), y(v.y), z(v.z) {}  // NOLINT

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  /// Component access in (w, x, y, z) order, i.e. x1..x4 of the horizontal coordinates.
  double operator[](int c) const { return c == 0 ? w : (c == 1 ? x : (c == 2 ? y : z)); }
  double& operator[](int c) { return c == 0 ? w : (c == 1 ? x : (c == 2 ? y : z)); }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  PureQuaternion im() const { return {x, y, z}; }
  double re() const { return w; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }
  Quaternion& operator+=(const Quaternion& o) { w += o.w; x += o.x; y += o.y; z += o.z; return *this; }

  /// Hamilton product.
  Quaternion operator*(const Quaternion& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z,
            w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w};
  }

  bool operator==(const Quaternion&) const = default;
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline Quaternion multiply(const Quaternion& p, const Quaternion& q) { return p * q; }

/// q^{-1} = conj(q)/|q|^2. Throws ErrorKind::Domain for the zero quaternion.
Quaternion inverse(const Quaternion& q);

/// exp(v) = cos|v| + (v/|v|) sin|v|, evaluated with a series-safe sinc so that exp_pure(0) == 1.
Quaternion exp_pure(const PureQuaternion& v);

/// sin(x)/x, Taylor-expanded for |x| < 1e-8.
double sinc(double x);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const PureQuaternion& v);

}  // namespace hqgeo
