#include "gyro/subgyro.hpp"

#include <stdexcept>

namespace gyro {

namespace {

void require_same(const FinSubset& a, const FinSubset& b) {
  if (a.model() != b.model()) throw std::invalid_argument("subsets belong to different models");
}

// First element of A not in B.
std::optional<Index> first_excess(const FinSubset& A, const FinSubset& B) {
  for (Index a : A.elements())
    if (!B.contains(a)) return a;
  return std::nullopt;
}

}  // namespace

Verdict is_subgyrogroup(const FinSubset& H) {
  if (H.empty()) throw std::invalid_argument("subgyrogroup test on the empty set");
  const auto& g = H.gyrogroup();
  if (!H.contains(g.identity())) return Verdict::no({}, "missing identity");
  for (Index a : H.elements())
    if (!H.contains(g.neg(a))) return Verdict::no({a}, "⊖a not in H");
  const auto hs = H.elements();
  for (Index a : hs)
    for (Index b : hs)
      if (!H.contains(g.add(a, b))) return Verdict::no({a, b}, "a⊕b not in H");
  return Verdict::yes();
}

Verdict is_L_subgyrogroup(const FinSubset& H) {
  if (!is_subgyrogroup(H)) throw std::invalid_argument("L-subgyrogroup test on a non-subgyrogroup");
  const auto& g = H.gyrogroup();
  for (Index a = 0; a < g.order(); ++a)
    for (Index h : H.elements())
      if (!(gyr_image(a, h, H) == H)) return Verdict::no({a, h}, "gyr[a,h](H) ≠ H");
  return Verdict::yes();
}

FinSubset generation_step(const FinSubset& U) {
  FinSubset sum = set_oplus(U, U);
  return set_neg(sum) | sum;
}

Generated generate_invariant(const FinSubset& U) {
  if (!is_symmetric_neighborhood(U))
    throw std::invalid_argument("generation needs a symmetric set containing 0");
  Generated out{U, {U}};
  for (;;) {
    FinSubset next = generation_step(out.trace.back());
    bool fixed = next == out.trace.back();
    out.trace.push_back(next);
    if (fixed) break;
  }
  out.subgyrogroup = out.trace.back();
  return out;
}

RadialGenerated generate_invariant(const RadialBall& U, std::size_t trace_steps) {
  RadialGenerated out;
  out.trace.push_back(U.radius());
  if (U.radius() == 0) {
    out.subgyrogroup = U;
    return out;
  }
  for (std::size_t k = 0; k < trace_steps; ++k)
    out.trace.push_back(radial_oplus(out.trace.back(), out.trace.back(), U.model()));
  out.whole_carrier = true;
  return out;
}

CheckReport validate_chain(const FiniteChain& chain, ChainLevel level, const BaseFamily* base) {
  CheckReport r("chain-" + to_string(level), Strategy::exhaustive());
  if (chain.sets.empty()) {
    r.add_violation({"structure", {}, "empty chain"});
    return r;
  }
  for (std::size_t n = 0; n < chain.sets.size(); ++n) {
    const auto& u = chain.sets[n];
    if (u.model() != chain.model) r.add_violation({"structure", {std::to_string(n)}, "set over another model"});
    if (!u.contains(chain.model->identity()))
      r.add_violation({"contains-identity", {std::to_string(n)}, "U" + std::to_string(n) + " misses 0"});
    if (!(set_neg(u) == u))
      r.add_violation({"symmetric", {std::to_string(n)}, "U" + std::to_string(n) + " ≠ ⊖U" + std::to_string(n)});
    if (!is_gyr_invariant(u)) r.add_note("U" + std::to_string(n) + " is not gyration-invariant");
  }
  if (r.violation_count() > 0) return r;

  if (level != ChainLevel::none) {
    // Pair (n, n+1) for every listed n; the last pair is the tail (last, last).
    for (std::size_t n = 0; n < chain.sets.size(); ++n) {
      const FinSubset& outer = chain.at(n);
      const FinSubset& inner = chain.at(n + 1);
      FinSubset sum = level == ChainLevel::double_level ? set_oplus(inner, inner)
                                                        : set_oplus(inner, set_oplus(inner, inner));
      r.count_tuple();
      if (auto x = first_excess(sum, outer))
        r.add_violation({"inclusion", {std::to_string(n), chain.model->label(*x)},
                         "element of U" + std::to_string(n + 1) + "-sum outside U" + std::to_string(n)});
    }
  }
  if (base) {
    if (!base->strongly_invariant())
      r.add_violation({"base-invariant", {}, "attached base is not strongly gyration-invariant"});
    for (std::size_t n = 0; n < chain.sets.size(); ++n)
      if (!base->contains(chain.sets[n]))
        r.add_violation({"base-member", {std::to_string(n)}, "U" + std::to_string(n) + " is not in the base"});
  }
  return r;
}

CheckReport validate_chain(const RadialChain& chain, ChainLevel level) {
  CheckReport r("chain-" + to_string(level), Strategy::exhaustive());
  if (chain.balls.empty()) {
    r.add_violation({"structure", {}, "empty chain"});
    return r;
  }
  for (std::size_t n = 0; n < chain.balls.size(); ++n)
    if (!(chain.balls[n].model() == chain.model))
      r.add_violation({"structure", {std::to_string(n)}, "ball over another model"});
  if (chain.tail_ratio && (*chain.tail_ratio <= 0 || *chain.tail_ratio >= 1))
    r.add_violation({"structure", {}, "tail ratio must lie in (0, 1)"});
  if (r.violation_count() > 0 || level == ChainLevel::none) return r;

  auto k_sum = [&](const RadialBall& b) {
    return level == ChainLevel::double_level ? set_oplus(b, b) : set_oplus(b, set_oplus(b, b));
  };
  for (std::size_t n = 0; n + 1 < chain.balls.size(); ++n) {
    r.count_tuple();
    RadialBall sum = k_sum(chain.balls[n + 1]);
    if (!is_subset(sum, chain.balls[n]))
      r.add_violation({"inclusion", {std::to_string(n)},
                       sum.to_string() + " ⊄ " + chain.balls[n].to_string()});
  }
  const RadialBall& last = chain.balls.back();
  r.count_tuple();
  if (!chain.tail_ratio) {
    RadialBall sum = k_sum(last);
    if (!is_subset(sum, last))
      r.add_violation({"inclusion", {std::to_string(chain.balls.size() - 1)},
                       "constant tail " + last.to_string() + " is not closed under the sum"});
  } else if (last.radius() > 0) {
    // For r > 0 the k-fold sum of q·r stays strictly below k·q·r, and tends to
    // it as r → 0, so every tail step holds iff k·q ≤ 1.
    const int k = level == ChainLevel::double_level ? 2 : 3;
    if (k * *chain.tail_ratio > 1)
      r.add_violation({"inclusion", {"tail"},
                       "geometric tail ratio " + to_string(*chain.tail_ratio) + " exceeds 1/" + std::to_string(k)});
  }
  return r;
}

FiniteChain certify(FiniteChain chain, ChainLevel level, const BaseFamily* base) {
  auto r = validate_chain(chain, level, base);
  if (!r.verdict()) {
    const auto& w = r.witnesses().front();
    throw std::invalid_argument("chain fails " + to_string(level) + " certification (" + w.rule + "): " + w.detail);
  }
  chain.certified = level;
  return chain;
}

RadialChain certify(RadialChain chain, ChainLevel level) {
  auto r = validate_chain(chain, level);
  if (!r.verdict()) {
    const auto& w = r.witnesses().front();
    throw std::invalid_argument("chain fails " + to_string(level) + " certification (" + w.rule + "): " + w.detail);
  }
  chain.certified = level;
  return chain;
}

FinSubset chain_intersection(const FiniteChain& chain) {
  if (chain.sets.empty()) throw std::invalid_argument("empty chain");
  FinSubset h = chain.sets.front();
  for (const auto& u : chain.sets) h = h & u;
  if (!is_subgyrogroup(h)) throw std::logic_error("chain intersection " + h.to_string() + " is not a subgyrogroup");
  if (!is_L_subgyrogroup(h)) throw std::logic_error("chain intersection " + h.to_string() + " is not an L-subgyrogroup");
  return h;
}

RadialBall chain_intersection(const RadialChain& chain) {
  if (chain.balls.empty()) throw std::invalid_argument("empty chain");
  if (chain.tail_ratio) return RadialBall::origin(chain.model);
  const RadialBall& last = chain.balls.back();
  if (last.radius() != 0 && !last.is_whole())
    throw std::logic_error("radial intersection " + last.to_string() + " is not a subgyrogroup");
  return last;
}

Verdict is_neutral(const FinSubset& H, const BaseFamily& base) {
  if (base.sets.empty()) throw std::invalid_argument("neutrality needs a nonempty base");
  if (!is_L_subgyrogroup(H)) throw std::invalid_argument("neutrality needs an L-subgyrogroup");
  for (const auto& u : base.sets) {
    require_same(H, u);
    FinSubset target = set_oplus(u, H);
    bool found = false;
    for (const auto& v : base.sets)
      if (is_subset(set_oplus(H, v), target)) {
        found = true;
        break;
      }
    if (!found) return Verdict::no(u.elements(), "no V with H⊕V ⊆ " + u.to_string() + "⊕H");
  }
  return Verdict::yes();
}

Verdict is_neutral_mirrored(const FinSubset& H, const BaseFamily& base) {
  if (base.sets.empty()) throw std::invalid_argument("neutrality needs a nonempty base");
  if (!is_L_subgyrogroup(H)) throw std::invalid_argument("neutrality needs an L-subgyrogroup");
  for (const auto& u : base.sets) {
    FinSubset target = set_oplus(H, u);
    bool found = false;
    for (const auto& v : base.sets)
      if (is_subset(set_oplus(v, H), target)) {
        found = true;
        break;
      }
    if (!found) return Verdict::no(u.elements(), "no V with V⊕H ⊆ H⊕" + u.to_string());
  }
  return Verdict::yes();
}

std::optional<std::string> char_inclusion_precondition(const FinSubset& U, const FinSubset& W,
                                                       const FinSubset& H) {
  require_same(U, W);
  require_same(U, H);
  if (!is_symmetric_neighborhood(U)) return "U is not a symmetric neighborhood of 0";
  if (!is_symmetric_neighborhood(W)) return "W is not a symmetric neighborhood of 0";
  if (!is_symmetric_neighborhood(H) || !is_subgyrogroup(H)) return "H is not a subgyrogroup";
  if (!is_subset(W, U)) return "W ⊄ U";
  if (!is_subset(set_oplus(H, W), set_oplus(U, H))) return "H⊕W ⊄ U⊕H";
  if (!is_gyr_invariant(U)) return "U is not gyration-invariant";
  if (!is_gyr_invariant(W)) return "W is not gyration-invariant";
  if (!is_gyr_invariant(H)) return "H is not gyration-invariant";
  return std::nullopt;
}

CheckReport verify_char_inclusion(const FinSubset& U, const FinSubset& W, const FinSubset& H) {
  CheckReport r("char-inclusion", Strategy::exhaustive());
  if (auto why = char_inclusion_precondition(U, W, H)) {
    r.add_violation({"precondition", {}, *why});
    return r;
  }
  FinSubset wh = set_oplus(W, H);
  FinSubset lhs = set_oplus(wh, set_neg(wh));
  FinSubset rhs = set_oplus(set_oplus(U, U), H);
  r.count_tuple(lhs.size());
  for (Index x : lhs.elements())
    if (!rhs.contains(x))
      r.add_violation({"inclusion", {U.gyrogroup().label(x)}, "(W⊕H)⊕⊖(W⊕H) element outside (U⊕U)⊕H"});
  return r;
}

SaturationResult saturation_check(const FinSubset& A, const FinSubset& U, const FinSubset& H,
                                  const BaseFamily& base) {
  require_same(A, U);
  require_same(A, H);
  SaturationResult out;
  const auto& g = A.gyrogroup();
  auto fail = [&](std::string why) {
    out.precondition_failure = std::move(why);
    return out;
  };
  if (H.empty() || !is_subgyrogroup(H)) return fail("H is not a subgyrogroup");
  if (!is_L_subgyrogroup(H)) return fail("H is not an L-subgyrogroup");
  if (!base.contains(U)) return fail("U is not in the base");
  if (!is_neutral(H, base)) return fail("H is not neutral for the base");

  // Coset representatives: least index of each a ⊕ H.
  std::vector<bool> covered(g.order());
  std::vector<Index> reps;
  for (Index a = 0; a < g.order(); ++a) {
    if (covered[a]) continue;
    reps.push_back(a);
    for (Index x : left_translate(a, H).elements()) covered[x] = true;
  }
  auto meets = [&](const FinSubset& S, Index rep) {
    for (Index x : left_translate(rep, H).elements())
      if (S.contains(x)) return true;
    return false;
  };
  for (Index rep : reps)
    if (!meets(A, rep)) return fail("A misses the coset of " + g.label(rep));

  out.preconditions_hold = true;
  FinSubset AU = set_oplus(A, U);
  for (Index rep : reps)
    if (!meets(AU, rep)) out.missed_cosets.push_back(rep);
  out.saturated = out.missed_cosets.empty();
  return out;
}

}  // namespace gyro
