#include "gyro/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace gyro {

std::string to_string(ChainLevel level) {
  switch (level) {
    case ChainLevel::none: return "none";
    case ChainLevel::double_level: return "double";
    case ChainLevel::triple_level: return "triple";
  }
  return "none";
}

ChainLevel parse_chain_level(const std::string& text) {
  if (text == "double") return ChainLevel::double_level;
  if (text == "triple" || text == "admissible") return ChainLevel::triple_level;
  if (text == "none") return ChainLevel::none;
  throw std::invalid_argument("unknown chain level \"" + text + "\"");
}

RadialBall RadialChain::at(std::size_t n) const {
  if (balls.empty()) throw std::logic_error("empty radial chain");
  if (n < balls.size() || !tail_ratio) return n < balls.size() ? balls[n] : balls.back();
  const RadialBall& last = balls.back();
  Rational r = last.radius();
  for (std::size_t k = balls.size() - 1; k < n; ++k) r *= *tail_ratio;
  return {model, r, last.closed()};
}

bool BaseFamily::contains(const FinSubset& s) const {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

bool BaseFamily::strongly_invariant() const {
  return std::all_of(sets.begin(), sets.end(), [](const FinSubset& u) { return is_gyr_invariant(u); });
}

}  // namespace gyro
