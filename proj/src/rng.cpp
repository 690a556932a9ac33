#include "qemlab/rng.hpp"

#include "qemlab/common.hpp"

namespace qemlab {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {
inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

void Rng::reseed(uint64_t seed) {
  uint64_t sm = seed;
  for (auto& w : s_) w = splitmix64(sm);
  // xoshiro state must not be all zero; splitmix64 output can't produce four
  // zero words from any seed, but keep the guard explicit.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[3] = 0x2545f4914f6cdd1dULL;
}

Rng Rng::for_trial(uint64_t seed, uint64_t stream, uint64_t trial) {
  uint64_t sm = seed;
  uint64_t a = splitmix64(sm);
  sm = a ^ (stream * 0xd6e8feb86659fd93ULL + 0x9e3779b97f4a7c15ULL);
  uint64_t b = splitmix64(sm);
  sm = b ^ (trial * 0xa24baed4963ee407ULL + 0x165667b19e3779f9ULL);
  return Rng(splitmix64(sm));
}

uint64_t Rng::next_u64() {
  const uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

uint64_t Rng::below(uint64_t bound) {
  require(bound >= 1, "Rng::below: bound must be >= 1");
  if ((bound & (bound - 1)) == 0) {
    // Power of two: take top bits.
    int shift = 64;
    uint64_t b = bound;
    while (b > 1) {
      b >>= 1;
      --shift;
    }
    return shift == 64 ? 0 : next_u64() >> shift;
  }
  // Rejection from the largest multiple of bound below 2^64.
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound + 1) % bound;
  for (;;) {
    uint64_t v = next_u64();
    if (v <= limit) return v % bound;
  }
}

}  // namespace qemlab
