#pragma once

#include <concepts>
#include <sstream>
#include <string>

#include "gyro/cayley.hpp"
#include "gyro/einstein.hpp"
#include "gyro/mobius.hpp"
#include "gyro/rng.hpp"

namespace gyro {

/// Anything exposing identity, ⊕, ⊖ and gyr over a value element type.
template <class M>
concept GyroModel = requires(const M& m, const typename M::element_type& a) {
  { m.identity() } -> std::convertible_to<typename M::element_type>;
  { m.add(a, a) } -> std::convertible_to<typename M::element_type>;
  { m.neg(a) } -> std::convertible_to<typename M::element_type>;
  { m.gyr(a, a, a) } -> std::convertible_to<typename M::element_type>;
};

/// gyr[x,y](z) as the model reports it (closed form, declared table, or derived).
template <GyroModel M>
typename M::element_type gyr_apply(const M& m, const typename M::element_type& x,
                                   const typename M::element_type& y,
                                   const typename M::element_type& z) {
  return m.gyr(x, y, z);
}

/// gyr[x,y](z) recovered from the gyroassociative law alone: the unique w
/// with (x⊕y)⊕w = x⊕(y⊕z), i.e. ⊖(x⊕y) ⊕ (x⊕(y⊕z)) by left cancellation.
template <GyroModel M>
typename M::element_type derived_gyr(const M& m, const typename M::element_type& x,
                                     const typename M::element_type& y,
                                     const typename M::element_type& z) {
  return m.add(m.neg(m.add(x, y)), m.add(x, m.add(y, z)));
}

inline Index derived_gyr(const CayleyGyro& m, Index x, Index y, Index z) {
  return m.derived_gyr(x, y, z);
}

// Per-model helpers used by the generic sweeps.

inline bool is_exact_model(const CayleyGyro&) { return true; }
template <Scalar T>
bool is_exact_model(const MobiusDisk<T>&) { return is_exact_v<T>; }
template <Scalar T>
bool is_exact_model(const EinsteinBall<T>&) { return is_exact_v<T>; }

inline std::string describe(const CayleyGyro& m, Index a) { return m.label(a); }
template <class M, class E>
std::string describe(const M&, const E& a) {
  std::ostringstream os;
  os.precision(17);
  os << a;
  return os.str();
}

inline double element_distance(const CayleyGyro&, Index a, Index b) { return a == b ? 0.0 : 1.0; }
template <class M, class E>
double element_distance(const M&, const E& a, const E& b) {
  return distance(a, b);
}

inline Index sample_element(const CayleyGyro& m, Rng& rng) { return uniform_index(rng, m.order()); }
template <class M>
typename M::element_type sample_element(const M& m, Rng& rng) {
  return m.sample(rng);
}

}  // namespace gyro
