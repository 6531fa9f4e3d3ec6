#pragma once

// Seeded randomness with output fixed by the seed alone: mt19937_64 is fully
// specified by the standard, and bounded draws use rejection rather than the
// implementation-defined std::uniform_int_distribution.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace symspec {

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return v % bound;
}

template <class T>
void shuffle_in_place(std::mt19937_64& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[draw_below(rng, i)]);
}

}  // namespace symspec
