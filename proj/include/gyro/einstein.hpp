#pragma once

#include <stdexcept>

#include "gyro/rng.hpp"
#include "gyro/vec3.hpp"

namespace gyro {

template <Scalar T>
void require_in_ball(const Vec3<T>& u, const T& c) {
  if (!(u.norm2() < c * c)) throw std::domain_error("operand outside the open c-ball");
}

/// Lorentz factor 1/√(1 − u·u/c²). In exact mode this throws unless the
/// factor is rational.
template <Scalar T>
T einstein_gamma(const Vec3<T>& u, const T& c) {
  if (!(c > T(0))) throw std::domain_error("speed bound must be positive");
  require_in_ball(u, c);
  T s = scalar_sqrt(T(T(1) - u.norm2() / (c * c)));
  return T(1) / s;
}

/// Einstein velocity addition on the c-ball.
template <Scalar T>
Vec3<T> einstein_add(const Vec3<T>& u, const Vec3<T>& v, const T& c) {
  require_in_ball(v, c);
  const T gamma = einstein_gamma(u, c);
  const T c2 = c * c;
  const T uv = u.dot(v);
  const T scale = T(1) / T(T(1) + uv / c2);
  const T kv = T(1) / gamma;
  const T ku = T(gamma / T(T(1) + gamma) * uv / c2);
  return scale * (u + kv * v + ku * u);
}

/// The Einstein gyrogroup on {u ∈ ℝ³ : ‖u‖ < c}. No closed-form gyration
/// is used: gyr[u,v](w) is derived by left cancellation,
/// ⊖(u⊕v) ⊕ (u⊕(v⊕w)).
template <Scalar T>
class EinsteinBall {
 public:
  using element_type = Vec3<T>;
  static constexpr bool exact = is_exact_v<T>;

  explicit EinsteinBall(T c = T(1)) : c_(std::move(c)) {
    if (!(c_ > T(0))) throw std::domain_error("speed bound must be positive");
  }

  const T& c() const { return c_; }
  element_type identity() const { return {}; }
  element_type add(const element_type& u, const element_type& v) const { return einstein_add(u, v, c_); }
  element_type neg(const element_type& u) const { return -u; }
  element_type gyr(const element_type& u, const element_type& v, const element_type& w) const {
    return add(neg(add(u, v)), add(u, add(v, w)));
  }
  T gamma(const element_type& u) const { return einstein_gamma(u, c_); }
  bool contains(const element_type& u) const { return u.norm2() < c_ * c_; }
  double bound() const { return scalar_to_double(c_); }
  double norm(const element_type& u) const { return abs(u); }
  std::string name() const { return exact ? "einstein-exact" : "einstein"; }

  /// Seeded draw uniform in the ball of radius max_fraction · c.
  element_type sample(Rng& rng, double max_fraction = 0.9) const {
    static_assert(!exact, "exact Einstein sampling would need rational Lorentz factors");
    for (;;) {
      element_type u{2 * unit_interval(rng) - 1, 2 * unit_interval(rng) - 1, 2 * unit_interval(rng) - 1};
      if (u.norm2() < 1.0) return (max_fraction * c_) * u;
    }
  }

 private:
  T c_;
};

}  // namespace gyro
