#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gyro/fin_subset.hpp"
#include "gyro/radial.hpp"

namespace gyro {

/// Inclusion strength certified for consecutive chain members:
/// double_level is U₊⊕U₊ ⊆ U, triple_level is U₊⊕(U₊⊕U₊) ⊆ U.
enum class ChainLevel { none, double_level, triple_level };

std::string to_string(ChainLevel level);
ChainLevel parse_chain_level(const std::string& text);

/// U₀, U₁, … over a finite carrier. The last listed set repeats forever.
struct FiniteChain {
  using set_type = FinSubset;

  ModelPtr model;
  std::vector<FinSubset> sets;
  ChainLevel certified = ChainLevel::none;

  const FinSubset& at(std::size_t n) const { return n < sets.size() ? sets[n] : sets.back(); }
  /// Index from which the chain is constant.
  std::size_t tail_start() const { return sets.empty() ? 0 : sets.size() - 1; }
  bool constant_tail() const { return true; }
};

/// Centered balls in an analytic model. Without a tail ratio the last ball
/// repeats; with ratio q the radii continue geometrically, rₙ₊₁ = q·rₙ.
struct RadialChain {
  using set_type = RadialBall;

  RadialModel model;
  std::vector<RadialBall> balls;
  std::optional<Rational> tail_ratio;
  ChainLevel certified = ChainLevel::none;

  RadialBall at(std::size_t n) const;
  std::size_t tail_start() const { return balls.empty() ? 0 : balls.size() - 1; }
  bool constant_tail() const { return !tail_ratio.has_value(); }
};

/// A finite family of candidate neighborhoods of 0.
struct BaseFamily {
  ModelPtr model;
  std::vector<FinSubset> sets;

  bool contains(const FinSubset& s) const;
  /// gyr[x,y](U) = U for every x, y and every member U.
  bool strongly_invariant() const;
};

}  // namespace gyro
