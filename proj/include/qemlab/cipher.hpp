#pragma once

#include <cstdint>
#include <iosfwd>

#include "qemlab/permutation.hpp"
#include "qemlab/rng.hpp"

namespace qemlab::perm {

struct Key {
  uint64_t k1 = 0;
  uint64_t k2 = 0;
  bool operator==(const Key&) const = default;
};

enum class KeyDistribution {
  two_key_uniform,  // k1, k2 independent uniform
  one_key,          // k1 uniform, k2 = k1
};

Key sample_key(KeyDistribution dist, int n, Rng& rng);

// Keyed cipher: x -> P(x ^ k1) ^ k2 over the public permutation P.
inline uint64_t em_forward(const Permutation& p, const Key& k, uint64_t x) {
  return p.forward(x ^ k.k1) ^ k.k2;
}

inline uint64_t em_inverse(const Permutation& p, const Key& k, uint64_t y) {
  return p.inverse(y ^ k.k2) ^ k.k1;
}

// Forward-only analogue over a plain function: x -> F(x ^ k).
inline uint64_t keyed_fn_forward(const FunctionTable& f, uint64_t k, uint64_t x) {
  return f(x ^ k);
}

// One line per component (k1 then k2), lowercase hex, newline-terminated.
void write_key_hex(std::ostream& os, const Key& key);
Key read_key_hex(std::istream& is);

}  // namespace qemlab::perm
