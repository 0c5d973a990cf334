#pragma once

#include <cstdint>
#include <random>

namespace gyro {

// Engine output is fully specified by the standard, unlike the
// distributions, so all draws go through these helpers.
using Rng = std::mt19937_64;

inline double unit_interval(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace gyro
