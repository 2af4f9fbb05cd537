#pragma once

#include <cstdint>
#include <random>

namespace tgg {

/// Uniform integer in [0, n) by rejection on raw mt19937_64 output, so draws
/// are identical on every standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace tgg
