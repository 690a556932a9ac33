#pragma once

#include <cstdint>

namespace qemlab {

// Deterministic, platform-independent generator so experiment trajectories are
// reproducible bit-for-bit from (seed, stream, trial) on any build.
//
// Core: xoshiro256** (Blackman/Vigna). State expansion and stream derivation:
// splitmix64 over seed, then stream and trial indices folded in with distinct
// odd constants before expansion. Bounded sampling uses rejection from the top
// bits so results do not depend on any library's distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) { reseed(seed); }

  // Independent stream for one Monte-Carlo trial of one experiment arm.
  static Rng for_trial(uint64_t seed, uint64_t stream, uint64_t trial);

  void reseed(uint64_t seed);

  uint64_t next_u64();

  // Uniform in [0, bound). bound >= 1.
  uint64_t below(uint64_t bound);

  // Uniform n-bit value.
  uint64_t bits(int n) { return n == 0 ? 0 : below(uint64_t{1} << n); }

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool coin() { return (next_u64() >> 63) != 0; }

 private:
  uint64_t s_[4];
};

uint64_t splitmix64(uint64_t& state);

}  // namespace qemlab
