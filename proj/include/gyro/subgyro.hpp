#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gyro/chain.hpp"
#include "gyro/check_report.hpp"

namespace gyro {

/// A yes/no answer; negative answers carry the violating elements.
struct Verdict {
  bool holds = true;
  std::vector<Index> witness;
  std::string detail;

  explicit operator bool() const { return holds; }
  static Verdict yes() { return {}; }
  static Verdict no(std::vector<Index> witness, std::string detail) {
    return {false, std::move(witness), std::move(detail)};
  }
};

/// 0 ∈ H, ⊖H = H and H ⊕ H ⊆ H. Throws std::invalid_argument on an empty set.
Verdict is_subgyrogroup(const FinSubset& H);

/// gyr[a,h](H) = H for all a ∈ G, h ∈ H. Throws std::invalid_argument when
/// H is not a subgyrogroup.
Verdict is_L_subgyrogroup(const FinSubset& H);

struct Generated {
  FinSubset subgyrogroup;
  std::vector<FinSubset> trace;  // U₀ ⊆ U₁ ⊆ … up to the repeated fixed point
  std::size_t steps() const { return trace.size() - 1; }
};

/// Iterates Uₙ = ⊖(Uₙ₋₁⊕Uₙ₋₁) ∪ (Uₙ₋₁⊕Uₙ₋₁) from a symmetric U until the
/// chain stops growing; returns the union. Throws std::invalid_argument
/// when U is not symmetric or misses 0.
Generated generate_invariant(const FinSubset& U);

/// One step of the generation recursion.
FinSubset generation_step(const FinSubset& U);

struct RadialGenerated {
  bool whole_carrier = false;
  std::optional<RadialBall> subgyrogroup;  // set only when the result is a ball
  std::vector<Rational> trace;             // radii of the first few iterates
};

/// Radius recursion rₙ = rₙ₋₁ ⊕ rₙ₋₁. Any positive radius climbs to the
/// bound, so the result is the whole carrier; radius 0 yields {0}.
RadialGenerated generate_invariant(const RadialBall& U, std::size_t trace_steps = 5);

/// Certifies symmetry, 0-membership and the requested inclusion level for
/// every consecutive pair including the tail; with a base attached also
/// checks that every set belongs to a strongly invariant base.
CheckReport validate_chain(const FiniteChain& chain, ChainLevel level, const BaseFamily* base = nullptr);
CheckReport validate_chain(const RadialChain& chain, ChainLevel level);

/// Returns a copy marked as certified at `level`; throws std::invalid_argument
/// with the first witness if validation fails.
FiniteChain certify(FiniteChain chain, ChainLevel level, const BaseFamily* base = nullptr);
RadialChain certify(RadialChain chain, ChainLevel level);

/// ⋂ Uₙ. Finite: the tail set. Radial: the tail ball, or {0} for a
/// geometric tail. Throws std::logic_error if the result is not an
/// L-subgyrogroup.
FinSubset chain_intersection(const FiniteChain& chain);
RadialBall chain_intersection(const RadialChain& chain);

/// For every U in the base there is V in the base with H ⊕ V ⊆ U ⊕ H.
/// The witness is the first U (as its element list) with no such V.
Verdict is_neutral(const FinSubset& H, const BaseFamily& base);

/// The mirrored form: for every U there is V with V ⊕ H ⊆ H ⊕ U.
Verdict is_neutral_mirrored(const FinSubset& H, const BaseFamily& base);

/// Reasons the inclusion kernel's hypotheses fail, or nullopt when they
/// all hold: U, W, H symmetric with 0, H a subgyrogroup, W ⊆ U,
/// H ⊕ W ⊆ U ⊕ H, and U, W, H invariant under every gyration.
std::optional<std::string> char_inclusion_precondition(const FinSubset& U, const FinSubset& W,
                                                       const FinSubset& H);

/// (W⊕H) ⊕ ⊖(W⊕H) ⊆ (U⊕U) ⊕ H. Precondition failures are reported as
/// "precondition" violations and the inclusion is then not evaluated.
CheckReport verify_char_inclusion(const FinSubset& U, const FinSubset& W, const FinSubset& H);

struct SaturationResult {
  bool preconditions_hold = false;
  std::string precondition_failure;
  bool saturated = false;
  std::vector<Index> missed_cosets;  // representatives of cosets missing A ⊕ U
};

/// Whether A ⊕ U meets every left coset of H, provided H is an
/// L-subgyrogroup neutral w.r.t. the base, U is in the base, and A meets
/// every coset.
SaturationResult saturation_check(const FinSubset& A, const FinSubset& U, const FinSubset& H,
                                  const BaseFamily& base);

}  // namespace gyro
