#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gyro/axioms.hpp"
#include "gyro/subgyro.hpp"

namespace gyro {

inline constexpr std::size_t kMaxDyadicDepth = 16;

/// Raised when V(q) ⊄ V(q') for some q < q'.
class MonotonicityError : public std::invalid_argument {
 public:
  MonotonicityError(double q, double q_next, std::string element)
      : std::invalid_argument("dyadic family is not monotone: element " + element + " in V(" +
                              format_number(q) + ") but not in V(" + format_number(q_next) + ")"),
        q_(q), q_next_(q_next), element_(std::move(element)) {}
  double q() const { return q_; }
  double q_next() const { return q_next_; }
  const std::string& element() const { return element_; }

 private:
  double q_, q_next_;
  std::string element_;
};

namespace detail {
std::string excess_witness(const FinSubset& a, const FinSubset& b);
std::string excess_witness(const RadialBall& a, const RadialBall& b);
}  // namespace detail

/// The dyadic family V(m/2ⁿ) built from a certified chain:
///   V(1) = U₀,  V(1/2ⁿ) = Uₙ,  V(2m/2ⁿ) = V(m/2ⁿ⁻¹),
///   V((2m+1)/2ⁿ) = Uₙ ⊕ V(m/2ⁿ⁻¹),
/// and V(q) = G for q > 1 (not stored). Monotonicity is audited on
/// construction.
template <class Chain>
class PrenormFamily {
 public:
  using Set = typename Chain::set_type;

  PrenormFamily(Chain chain, std::size_t depth) : chain_(std::move(chain)), depth_(depth) {
    if (chain_.certified == ChainLevel::none)
      throw std::invalid_argument("dyadic family needs a chain certified at double level or stronger");
    if (depth_ < 1 || depth_ > kMaxDyadicDepth)
      throw std::invalid_argument("depth must lie in [1, " + std::to_string(kMaxDyadicDepth) + "]");
    std::vector<Set> level{chain_.at(0)};
    for (std::size_t n = 1; n <= depth_; ++n) {
      const std::uint64_t count = std::uint64_t{1} << n;
      std::vector<Set> next;
      next.reserve(count);
      const Set un = chain_.at(n);
      for (std::uint64_t m = 1; m <= count; ++m) {
        if (m % 2 == 0) {
          next.push_back(level[m / 2 - 1]);
        } else if (m == 1) {
          next.push_back(un);
        } else {
          next.push_back(set_oplus(un, level[(m - 1) / 2 - 1]));
        }
      }
      level = std::move(next);
    }
    finest_ = std::move(level);
    for (std::uint64_t m = 1; m < finest_.size(); ++m) {
      const Set& a = finest_[m - 1];
      const Set& b = finest_[m];
      if (!is_subset(a, b))
        throw MonotonicityError(dyadic(m), dyadic(m + 1), detail::excess_witness(a, b));
    }
  }

  const Chain& chain() const { return chain_; }
  std::size_t depth() const { return depth_; }

  /// V(m / 2ⁿ) for 1 ≤ m ≤ 2ⁿ and n ≤ depth.
  const Set& V(std::size_t n, std::uint64_t m) const {
    if (n > depth_ || m < 1 || m > (std::uint64_t{1} << n))
      throw std::out_of_range("dyadic index outside the stored family");
    return finest_[(m << (depth_ - n)) - 1];
  }

  /// Sets V(m / 2^depth), m = 1 … 2^depth, in increasing order.
  const std::vector<Set>& finest() const { return finest_; }
  double dyadic(std::uint64_t m) const { return std::ldexp(static_cast<double>(m), -static_cast<int>(depth_)); }

  /// Exact when the chain is constant from some index not beyond depth.
  bool exact() const { return chain_.constant_tail() && depth_ >= chain_.tail_start(); }
  double resolution() const { return exact() ? 0.0 : std::ldexp(1.0, -static_cast<int>(depth_)); }

 private:
  Chain chain_;
  std::size_t depth_;
  std::vector<Set> finest_;
};

template <class Chain>
PrenormFamily<Chain> build_dyadic(Chain chain, std::size_t depth) {
  return PrenormFamily<Chain>(std::move(chain), depth);
}

/// Default depth: listed sets before the tail, plus two.
inline std::size_t default_depth(const FiniteChain& c) { return std::min(c.sets.size() + 1, kMaxDyadicDepth); }
inline std::size_t default_depth(const RadialChain& c) { return std::min(c.balls.size() + 1, kMaxDyadicDepth); }

/// N(x) = inf{q : x ∈ V(q)} on a finite carrier, tabulated.
///
/// With a constant tail T from index L ≤ depth, every dyadic deeper than
/// the stored ones only prepends T⊕ to a stored V(p), so the infimum is the
/// least stored p whose T-closure of V(p) contains x (p = 0 standing for
/// {0}). That makes the table exact; otherwise it is an upper bound
/// within resolution().
class FinitePrenorm {
 public:
  explicit FinitePrenorm(PrenormFamily<FiniteChain> family);

  double operator()(Index x) const { return table_.at(x); }
  const PrenormFamily<FiniteChain>& family() const { return family_; }
  const FinSubset& subgyrogroup() const { return h_; }
  const CayleyGyro& gyrogroup() const { return *family_.chain().model; }
  const ModelPtr& model() const { return family_.chain().model; }
  const std::vector<double>& table() const { return table_; }

 private:
  PrenormFamily<FiniteChain> family_;
  FinSubset h_;
  std::vector<double> table_;
};

inline double prenorm_eval(const FinitePrenorm& n, Index x) {
  if (x >= n.gyrogroup().order()) throw std::out_of_range("element outside carrier");
  return n(x);
}

/// N on an analytic model, from centered balls: depends on |x| only.
class RadialPrenorm {
 public:
  explicit RadialPrenorm(PrenormFamily<RadialChain> family) : family_(std::move(family)) {}

  double of_norm(double norm) const;
  const PrenormFamily<RadialChain>& family() const { return family_; }

 private:
  PrenormFamily<RadialChain> family_;
};

template <class E>
double prenorm_eval(const RadialPrenorm& n, const E& x) {
  const double r = abs(x);
  if (!(r < to_double(n.family().chain().model.bound()))) throw std::out_of_range("element outside carrier");
  return n.of_norm(r);
}

/// Items (i)–(vi), exhaustively:
///  (i) N(⊖x) = N(x)  (ii) N(x⊕y) ≤ N(x)+N(y)  (iii) N(gyr[x,y]z) = N(z)
///  (iv) N(x⊕h) = N(x), h ∈ H  (v) {N < 2⁻ⁿ} ⊆ Uₙ ⊆ {N ≤ 2¹⁻ⁿ}, n ≤ depth
///  (vi) N(x) = 0 ⇔ x ∈ H
CheckReport prenorm_audit(const FinitePrenorm& n);

/// The same items on seeded samples from an analytic model; norms are
/// spread over the scales of the chain so every stored level is exercised.
template <class Model>
CheckReport prenorm_audit(const RadialPrenorm& N, const Model& model, const Strategy& strategy,
                          double tolerance = kDefaultTolerance);

}  // namespace gyro

#include "gyro/prenorm_radial_audit.hpp"
