#pragma once

#include <cstdint>
#include <functional>

#include "qemlab/attacks/attack_result.hpp"
#include "qemlab/permutation.hpp"
#include "qemlab/rng.hpp"

namespace qemlab::attacks {

struct BirthdayConfig {
  uint64_t delta = 1;    // nonzero pair offset
  uint64_t d_size = 0;   // cipher-side target pairs (0 is a legal always-fail run)
  uint64_t t_size = 0;   // permutation-side probes
};

// Fully classical meet-in-the-middle key recovery. Builds d_size targets
// t_i = E(x_i) ^ E(x_i ^ delta) at pair-wise distinct x_i, then probes t_size
// independent uniform u computing P(u) ^ P(u ^ delta). A probe matching some
// t_i is decoded as k1 = u ^ x_i, k2 = E(x_i) ^ P(u) and checked against two
// held-out cipher pairs; failed candidates do not stop the probe loop. A
// probe succeeds only when u lands exactly on x_i ^ k1 for some i (the
// partner point decodes to k1 ^ delta and fails verification), so the success
// probability is 1 - (1 - d_size/2^n)^t_size.
AttackResult classical_birthday_attack(int n, const std::function<uint64_t(uint64_t)>& e_oracle,
                                       const perm::Permutation& p, const BirthdayConfig& cfg,
                                       Rng& rng);

}  // namespace qemlab::attacks
