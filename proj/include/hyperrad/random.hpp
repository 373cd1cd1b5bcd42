#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace hyperrad {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). The standard distributions are not
/// reproducible across library implementations, so seeded runs draw through
/// this instead.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = top - top % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace hyperrad
