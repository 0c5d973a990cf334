#pragma once

#include <stdexcept>
#include <type_traits>

#include "gyro/check_report.hpp"
#include "gyro/model_traits.hpp"

namespace gyro {

inline constexpr double kDefaultTolerance = 1e-9;

/// G1–G4 on a raw table. Exhaustive is O(n⁴); a sampled strategy draws
/// (x, y, z, w) tuples for the gyration laws while G1/G2 stay exhaustive.
CheckReport check_axioms(const CayleyTable& table, const Strategy& strategy = Strategy::exhaustive());

/// Same checks on a validated model; additionally compares declared and
/// derived gyrations when a gyration table was declared.
CheckReport check_axioms(const CayleyGyro& model, const Strategy& strategy = Strategy::exhaustive());

/// Exhaustive for orders up to 32, sampled (seeded) beyond.
Strategy default_finite_strategy(std::size_t order, std::uint64_t seed = 0, std::size_t samples = 100000);

namespace detail {

template <class M, class Fn>
void visit_tuples(const M& m, const Strategy& s, std::size_t arity, Fn&& fn) {
  using E = typename M::element_type;
  if (s.is_exhaustive()) {
    if constexpr (std::is_same_v<M, CayleyGyro>) {
      const std::size_t n = m.order();
      std::vector<E> t(arity, 0);
      std::size_t total = 1;
      for (std::size_t i = 0; i < arity; ++i) total *= n;
      for (std::size_t k = 0; k < total; ++k) {
        std::size_t rest = k;
        for (std::size_t i = arity; i-- > 0;) {
          t[i] = rest % n;
          rest /= n;
        }
        fn(t);
      }
    } else {
      throw std::invalid_argument("exhaustive strategy requires a finite carrier");
    }
  } else {
    Rng rng(s.seed);
    std::vector<E> t(arity);
    for (std::size_t k = 0; k < s.count; ++k) {
      for (auto& e : t) e = sample_element(m, rng);
      fn(t);
    }
  }
}

template <class M, class E>
void compare(CheckReport& r, const M& m, const char* rule, const E& lhs, const E& rhs,
             std::initializer_list<const E*> ctx) {
  Witness w{rule, {}, "lhs=" + describe(m, lhs) + " rhs=" + describe(m, rhs)};
  for (const E* e : ctx) w.elements.push_back(describe(m, *e));
  if (is_exact_model(m)) {
    if (!(lhs == rhs)) r.add_violation(std::move(w));
  } else {
    r.observe_residual(element_distance(m, lhs, rhs), w);
  }
}

}  // namespace detail

/// Sampled G1–G4 for analytic models: identity and inverse laws per sample,
/// gyroassociativity against the model's gyration, the automorphism law,
/// invertibility via gyr[y,x]∘gyr[x,y] = id, and the loop property.
/// Exact models are compared with ==, floating ones against `tolerance`.
template <GyroModel M>
CheckReport check_axioms(const M& m, const Strategy& strategy, double tolerance = kDefaultTolerance) {
  CheckReport r("axioms", strategy, is_exact_model(m) ? 0.0 : tolerance);
  using E = typename M::element_type;
  const E zero = m.identity();
  detail::visit_tuples(m, strategy, 4, [&](const std::vector<E>& t) {
    const E &x = t[0], &y = t[1], &z = t[2], &w = t[3];
    r.count_tuple();
    detail::compare(r, m, "G1-left", m.add(zero, x), x, {&x});
    detail::compare(r, m, "G1-right", m.add(x, zero), x, {&x});
    detail::compare(r, m, "G2-left", m.add(m.neg(x), x), zero, {&x});
    detail::compare(r, m, "G2-right", m.add(x, m.neg(x)), zero, {&x});
    detail::compare(r, m, "G3-law", m.add(x, m.add(y, z)), m.add(m.add(x, y), m.gyr(x, y, z)), {&x, &y, &z});
    detail::compare(r, m, "G3-automorphism", m.gyr(x, y, m.add(z, w)),
                    m.add(m.gyr(x, y, z), m.gyr(x, y, w)), {&x, &y, &z, &w});
    detail::compare(r, m, "G3-bijection", m.gyr(y, x, m.gyr(x, y, z)), z, {&x, &y, &z});
    detail::compare(r, m, "G4", m.gyr(m.add(x, y), y, z), m.gyr(x, y, z), {&x, &y, &z});
  });
  if (!strategy.is_exhaustive())
    r.add_note("uniqueness of identity and inverses is not sample-checkable; laws checked pointwise");
  return r;
}

/// The identity suite used by the metric construction:
///  (i)   ⊖x⊕y = (⊖x⊕z) ⊕ gyr[⊖x,z](⊖z⊕y)
///  (ii)  ⊖(a⊕b) = gyr[a,b](⊖b ⊕ ⊖a)
///  (iii) x = (x⊕h) ⊕ gyr[x,h](⊖h)
///  (iv)  ⊖a ⊕ (a⊕b) = b
///  (v)   gyr[x⊕y,y](z) = gyr[x,y](z)
template <GyroModel M>
CheckReport check_identities(const M& m, const Strategy& strategy, double tolerance = kDefaultTolerance) {
  CheckReport r("identities", strategy, is_exact_model(m) ? 0.0 : tolerance);
  using E = typename M::element_type;
  detail::visit_tuples(m, strategy, 3, [&](const std::vector<E>& t) {
    const E &x = t[0], &y = t[1], &z = t[2];
    r.count_tuple();
    const E nx = m.neg(x);
    detail::compare(r, m, "i-gyrotriangle", m.add(nx, y),
                    m.add(m.add(nx, z), m.gyr(nx, z, m.add(m.neg(z), y))), {&x, &y, &z});
    detail::compare(r, m, "ii-negation", m.neg(m.add(x, y)), m.gyr(x, y, m.add(m.neg(y), nx)), {&x, &y});
    detail::compare(r, m, "iii-right-recovery", x, m.add(m.add(x, y), m.gyr(x, y, m.neg(y))), {&x, &y});
    detail::compare(r, m, "iv-left-cancellation", m.add(nx, m.add(x, y)), y, {&x, &y});
    detail::compare(r, m, "v-loop", m.gyr(m.add(x, y), y, z), m.gyr(x, y, z), {&x, &y, &z});
  });
  return r;
}

}  // namespace gyro
