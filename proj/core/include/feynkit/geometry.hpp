#pragma once

#include <cmath>

namespace feynkit {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  bool operator==(const Vec3&) const = default;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
  Vec3 normalized() const { return *this / norm(); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return a.dot(b.cross(c)); }

/// Rodrigues rotation of v around the unit axis by the given angle.
inline Vec3 rotate_about(const Vec3& v, const Vec3& unit_axis, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return v * c + unit_axis.cross(v) * s + unit_axis * (unit_axis.dot(v) * (1.0 - c));
}

/// Any unit vector orthogonal to the given (nonzero) vector.
inline Vec3 any_orthogonal(const Vec3& v) {
  const Vec3 ref = std::abs(v.x) < 0.9 * v.norm() ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  return v.cross(ref).normalized();
}

}  // namespace feynkit
