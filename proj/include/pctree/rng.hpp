#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pctree/errors.hpp"

namespace pctree {

// Bounded sampling on top of mt19937_64. std::uniform_int_distribution is
// implementation-defined, so seeded runs would not be stable across standard
// libraries; these are.
inline uint64_t uniform_u64(std::mt19937_64& rng, uint64_t bound) {
  if (bound == 0) throw InvalidParametersError("uniform_u64: empty range");
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_u64(rng, static_cast<uint64_t>(hi - lo) + 1));
}

inline double uniform_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle_vec(std::mt19937_64& rng, std::vector<T>& v) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[uniform_u64(rng, i)]);
}

}  // namespace pctree
