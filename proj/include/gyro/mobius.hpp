#pragma once

#include <stdexcept>

#include "gyro/complex.hpp"
#include "gyro/rng.hpp"

namespace gyro {

template <Scalar T>
void require_in_disk(const Complex<T>& a) {
  if (!(a.norm2() < T(1))) throw std::domain_error("operand outside the open unit disk");
}

/// a ⊕ b = (a + b) / (1 + ā b)
template <Scalar T>
Complex<T> mobius_add(const Complex<T>& a, const Complex<T>& b) {
  require_in_disk(a);
  require_in_disk(b);
  return (a + b) / (Complex<T>(T(1)) + a.conj() * b);
}

/// (1 + a b̄) / (1 + ā b), the unit-modulus factor with gyr[a,b](c) = factor · c.
template <Scalar T>
Complex<T> mobius_gyr_factor(const Complex<T>& a, const Complex<T>& b) {
  require_in_disk(a);
  require_in_disk(b);
  const Complex<T> one(T(1));
  return (one + a * b.conj()) / (one + a.conj() * b);
}

/// The Möbius gyrogroup on the complex open unit disk.
template <Scalar T>
class MobiusDisk {
 public:
  using element_type = Complex<T>;
  static constexpr bool exact = is_exact_v<T>;

  element_type identity() const { return {}; }
  element_type add(const element_type& a, const element_type& b) const { return mobius_add(a, b); }
  element_type neg(const element_type& a) const { return -a; }
  element_type gyr(const element_type& a, const element_type& b, const element_type& c) const {
    return mobius_gyr_factor(a, b) * c;
  }
  bool contains(const element_type& a) const { return a.norm2() < T(1); }
  double bound() const { return 1.0; }
  double norm(const element_type& a) const { return abs(a); }
  std::string name() const { return exact ? "mobius-exact" : "mobius"; }

  /// Seeded draw from the disk of radius `max_radius` (uniform in area).
  /// The exact model draws rationals with power-of-two denominators.
  element_type sample(Rng& rng, double max_radius = 0.9) const;
};

template <>
inline Complex<double> MobiusDisk<double>::sample(Rng& rng, double max_radius) const {
  double r = max_radius * std::sqrt(unit_interval(rng));
  double t = 2.0 * 3.14159265358979323846 * unit_interval(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

template <>
inline Complex<Rational> MobiusDisk<Rational>::sample(Rng& rng, double max_radius) const {
  const long den = 1L << (3 + rng() % 6);
  const long lim = static_cast<long>(max_radius * static_cast<double>(den));
  for (;;) {
    long p = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * lim + 1)) - lim;
    long q = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * lim + 1)) - lim;
    Complex<Rational> z{Rational(p, den), Rational(q, den)};
    z.re.canonicalize();
    z.im.canonicalize();
    if (z.norm2() < Rational(max_radius * max_radius)) return z;
  }
}

}  // namespace gyro
