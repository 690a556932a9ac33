#pragma once

#include <span>

#include "qemlab/attacks/attack_result.hpp"
#include "qemlab/permutation.hpp"
#include "qemlab/rng.hpp"

namespace qemlab::attacks {

// Two-oracle key recovery with quantum access to both the keyed cipher E and
// the public permutation P. Each iteration prepares a uniform input register,
// XORs E and then P into the output register (so the output holds
// f(x) = E(x) ^ P(x), which is k1-periodic), un-computes the input basis with
// Hadamards and measures a vector orthogonal to k1. Rank n-1 pins the period;
// k2 follows from one classical pair and the key is verified on two held-out
// inputs. The k1 = 0 degenerate case (f constant) is checked up front. On a
// failed verification the attack restarts from scratch within the same
// iteration budget. max_iterations <= 0 selects the default of 3n.
AttackResult simon_q2_attack(int n, const perm::Permutation& p, const perm::Key& k, Rng& rng,
                             int max_iterations = 0);

// Core routine against explicit oracle tables (used by the game wrapper so
// query counting stays with the game's own oracles).
AttackResult simon_q2_core(int n, std::span<const uint32_t> e_table,
                           std::span<const uint32_t> p_table, Rng& rng, int max_iterations,
                           long* e_quantum_uses, long* p_quantum_uses, long* e_classical_uses);

}  // namespace qemlab::attacks
