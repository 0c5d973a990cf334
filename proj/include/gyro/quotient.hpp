#pragma once

#include <string>
#include <vector>

#include "gyro/prenorm.hpp"

namespace gyro {

/// The left cosets a ⊕ H of an L-subgyrogroup H. Cosets are numbered by
/// their canonical representative (least element index), in increasing order.
class CosetSpace {
 public:
  /// Throws std::invalid_argument if H is not an L-subgyrogroup or the
  /// cosets fail to partition the carrier.
  explicit CosetSpace(FinSubset H);

  std::size_t size() const { return representatives_.size(); }
  const FinSubset& subgyrogroup() const { return h_; }
  const ModelPtr& model() const { return h_.model(); }
  const CayleyGyro& gyrogroup() const { return h_.gyrogroup(); }

  /// π(a), as a coset number.
  std::size_t project(Index a) const { return projection_.at(a); }
  Index representative(std::size_t coset) const { return representatives_.at(coset); }
  const FinSubset& coset(std::size_t c) const { return cosets_.at(c); }
  /// π⁻¹ of a set of coset numbers.
  FinSubset preimage(const std::vector<std::size_t>& cosets) const;

 private:
  FinSubset h_;
  std::vector<Index> representatives_;
  std::vector<FinSubset> cosets_;
  std::vector<std::size_t> projection_;
};

inline CosetSpace coset_space(const FinSubset& H) { return CosetSpace(H); }

/// Ground pseudometric on G used when comparing balls.
///   two_sided:   d(x, x') = N(⊖x⊕x') + N(⊖x'⊕x)
///   abs_printed: d(x, x') = |N(x) − N(x')|
enum class GroundMetric { two_sided, abs_printed };

std::string to_string(GroundMetric m);
GroundMetric parse_ground_metric(const std::string& text);

/// ϱ(π(x), π(y)) = N(⊖x⊕y) + N(⊖y⊕x), tabulated over coset pairs from
/// canonical representatives.
class QuotientMetric {
 public:
  /// Throws std::invalid_argument when the prenorm's kernel differs from H.
  QuotientMetric(CosetSpace space, FinitePrenorm prenorm, GroundMetric variant = GroundMetric::two_sided);

  const CosetSpace& space() const { return space_; }
  const FinitePrenorm& prenorm() const { return prenorm_; }
  GroundMetric variant() const { return variant_; }

  double operator()(std::size_t p, std::size_t q) const { return table_[p * space_.size() + q]; }
  /// ϱ evaluated from arbitrary representatives x, y.
  double from_elements(Index x, Index y) const;
  double ground(Index x, Index y) const { return ground(x, y, variant_); }
  double ground(Index x, Index y, GroundMetric m) const;

  /// Exhaustive: representative independence, symmetry, triangle inequality,
  /// ϱ = 0 ⇔ same coset, and the gyrotriangle expansion of N(⊖x⊕y).
  CheckReport audit() const;

 private:
  CosetSpace space_;
  FinitePrenorm prenorm_;
  GroundMetric variant_;
  std::vector<double> table_;
};

inline QuotientMetric quotient_metric(CosetSpace space, FinitePrenorm prenorm,
                                      GroundMetric variant = GroundMetric::two_sided) {
  return QuotientMetric(std::move(space), std::move(prenorm), variant);
}

/// Open balls on both sides of the projection.
FinSubset ground_ball(const QuotientMetric& metric, Index x, double eps, GroundMetric variant);
FinSubset quotient_ball_preimage(const QuotientMetric& metric, Index x, double eps);

/// Compares B(x, ε) with π⁻¹(B*(π(x), ε)). Under two_sided mismatches are
/// violations; under abs_printed the report is marked informational and
/// mismatches are recorded as counterexamples.
CheckReport ball_correspondence(const QuotientMetric& metric, Index x, double eps, GroundMetric variant);

/// Every x and every ε in {distinct ϱ values} ∪ {midpoints} ∪ {max + 1}.
CheckReport ball_correspondence_sweep(const QuotientMetric& metric, GroundMetric variant);

}  // namespace gyro
