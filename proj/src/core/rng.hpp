#pragma once

#include <cstdint>
#include <random>

namespace codered {

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementations so streams match across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace codered
