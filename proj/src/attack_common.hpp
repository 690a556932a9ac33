#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qemlab/common.hpp"
#include "qemlab/rng.hpp"

namespace qemlab::attacks::detail {

// Pairwise- and partner-distinct random inputs: no chosen x repeats and no
// chosen x is another's partner under delta, so the chosen points describe
// `count` disjoint pairs. `used` marks every touched input.
inline std::vector<uint64_t> sample_pair_representatives(int n, uint64_t delta, uint64_t count,
                                                         std::vector<char>* used, Rng& rng) {
  std::vector<uint64_t> xs;
  xs.reserve(count);
  while (xs.size() < count) {
    const uint64_t x = rng.bits(n);
    if ((*used)[x] || (*used)[x ^ delta]) continue;
    (*used)[x] = (*used)[x ^ delta] = 1;
    xs.push_back(x);
  }
  return xs;
}

// Two verification inputs, outside the queried set whenever any inputs remain
// free (with full coverage any two distinct points still pin a wrong key).
inline std::pair<uint64_t, uint64_t> pick_holdouts(int n, const std::vector<char>& used,
                                                   Rng& rng) {
  const uint64_t size = uint64_t{1} << n;
  const uint64_t start = rng.bits(n);
  uint64_t found[2];
  int have = 0;
  for (uint64_t i = 0; i < size && have < 2; ++i) {
    const uint64_t v = (start + i) & bit_mask(n);
    if (!used[v]) found[have++] = v;
  }
  if (have == 2) return {found[0], found[1]};
  if (have == 1) return {found[0], found[0] ^ 1};
  return {start, start ^ 1};
}

}  // namespace qemlab::attacks::detail
