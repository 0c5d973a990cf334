#pragma once

#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "gyro/rational.hpp"

namespace gyro {

// Arithmetic mode of an analytic model: IEEE doubles with a tolerance, or
// exact rationals compared with ==.
template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Rational>;

inline double scalar_to_double(double v) { return v; }
inline double scalar_to_double(const Rational& v) { return v.get_d(); }

inline double scalar_sqrt(double v) { return std::sqrt(v); }

// Exact mode only supports square roots that stay rational.
inline Rational scalar_sqrt(const Rational& v) {
  auto r = exact_sqrt(v);
  if (!r) throw std::domain_error("square root of " + to_string(v) + " is not rational");
  return *r;
}

}  // namespace gyro
