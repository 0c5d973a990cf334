#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "gyro/scalar.hpp"

namespace gyro {

template <Scalar T>
struct Vec3 {
  std::array<T, 3> v{T(0), T(0), T(0)};

  Vec3() = default;
  Vec3(T x, T y, T z) : v{std::move(x), std::move(y), std::move(z)} {}

  const T& operator[](std::size_t i) const { return v[i]; }
  T& operator[](std::size_t i) { return v[i]; }

  T dot(const Vec3& o) const { return v[0] * o.v[0] + v[1] * o.v[1] + v[2] * o.v[2]; }
  T norm2() const { return dot(*this); }

  Vec3 operator-() const { return {-v[0], -v[1], -v[2]}; }
  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2]};
  }
  friend Vec3 operator*(const T& k, const Vec3& a) { return {k * a.v[0], k * a.v[1], k * a.v[2]}; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.v == b.v; }

  friend std::ostream& operator<<(std::ostream& os, const Vec3& a) {
    return os << '(' << a.v[0] << ", " << a.v[1] << ", " << a.v[2] << ')';
  }
};

template <Scalar T>
double abs(const Vec3<T>& a) {
  return std::sqrt(scalar_to_double(a.norm2()));
}

template <Scalar T>
double distance(const Vec3<T>& a, const Vec3<T>& b) {
  return abs(a - b);
}

}  // namespace gyro
