#pragma once

#include <cstdint>

namespace strata {

inline constexpr std::uint64_t kDefaultSeed = 42;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent per-case seed, so results do not depend on scheduling.
inline constexpr std::uint64_t case_seed(std::uint64_t suite_seed, std::uint64_t case_id) {
  return splitmix64(splitmix64(suite_seed) ^ case_id);
}

}  // namespace strata
