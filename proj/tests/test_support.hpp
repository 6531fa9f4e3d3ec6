#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "symspec/permutation.hpp"
#include "symspec/random.hpp"

namespace symspec::testing {

using symspec::draw_below;

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  shuffle_in_place(rng, img);
  return Permutation(std::move(img));
}

}  // namespace symspec::testing
