#include "qemlab/cipher.hpp"

#include <ostream>

namespace qemlab::perm {

Key sample_key(KeyDistribution dist, int n, Rng& rng) {
  require(n >= 1 && n <= 28, "sample_key: bit width must be in [1, 28]");
  Key k;
  k.k1 = rng.bits(n);
  k.k2 = dist == KeyDistribution::one_key ? k.k1 : rng.bits(n);
  return k;
}

void write_key_hex(std::ostream& os, const Key& key) {
  const uint32_t parts[2] = {static_cast<uint32_t>(key.k1), static_cast<uint32_t>(key.k2)};
  write_hex_lines(os, parts);
}

Key read_key_hex(std::istream& is) {
  auto vals = read_hex_lines(is);
  require(vals.size() == 2, "read_key_hex: expected exactly two lines");
  return Key{vals[0], vals[1]};
}

}  // namespace qemlab::perm
