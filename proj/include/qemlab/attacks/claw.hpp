#pragma once

#include <cstdint>
#include <functional>

#include "qemlab/attacks/attack_result.hpp"
#include "qemlab/permutation.hpp"
#include "qemlab/rng.hpp"

namespace qemlab::attacks {

struct ClawConfig {
  uint64_t delta = 1;        // nonzero pair offset
  uint64_t table_size = 1;   // number of (x_i, x_i ^ delta) target pairs; costs 2*table_size
                             // classical cipher queries
  int max_retries = 4;       // extra amplification runs allowed after the first fails
  bool exhaustive = false;   // scan the whole domain classically instead of amplifying;
                             // fills marked_count / verifying_count diagnostics
};

// Claw-finding key recovery with classical cipher access and quantum access to
// the public permutation. Phase 1 queries the cipher at table_size pair-wise
// distinct x_i and their partners x_i ^ delta, storing targets
// t_i = E(x_i) ^ E(x_i ^ delta). Phase 2 amplifies the predicate
// g(u) = P(u) ^ P(u ^ delta) \in {t_i}; a measured u is decoded as
// k1 = u ^ x_i for each matching i, k2 = E(x_i) ^ P(u), and checked against
// two held-out cipher pairs queried up front. A run whose candidate fails
// verification is retried whole-cloth up to max_retries times.
//
// The amplification hint is the expected marked count: 2*table_size true
// solutions ({x_i ^ k1, x_i ^ delta ^ k1}) plus the expected number of
// chance matches among the remaining inputs.
AttackResult q1_claw_attack(int n, const perm::Permutation& p,
                            const std::function<uint64_t(uint64_t)>& e_oracle,
                            const ClawConfig& cfg, Rng& rng);

// Expected-marked-count hint used for the iteration count (exposed so
// predictions can reproduce the schedule).
uint64_t claw_marked_hint(int n, uint64_t table_size);

// Predicted probability that a single amplification run ends in a verified
// key: closed-form measurement success for `marked` targets times the
// verifying fraction. marked/verifying come from an exhaustive-mode run on
// the same instance.
double claw_run_success_prediction(int n, long marked, long verifying, int iterations);

}  // namespace qemlab::attacks
