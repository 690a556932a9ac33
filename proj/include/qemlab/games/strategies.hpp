#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qemlab/games/em_env.hpp"
#include "qemlab/games/lemma_games.hpp"

namespace qemlab::games::strategies {

// ---- cipher-game distinguishers ---------------------------------------------
// Factories return fresh single-shot adversaries; any per-run state lives in
// the returned closures, so one adversary instance serves one game run.

// No queries; guesses by coin flip. Baseline with bound 0.
EmAdversary coin_guesser();

// One classical query, guess = low bit of the answer. Uses no public-oracle
// queries, where real and ideal worlds are perfectly indistinguishable.
EmAdversary low_bit_prober();

// Classical queries at x = 0..q_e-1 plus public probes at u = 0..q_p-1;
// guesses 1 when some probed difference P(u) ^ P(u ^ (x_i ^ x_j)) matches a
// ciphertext difference y_i ^ y_j (key-consistency evidence). Forward-only
// safe.
EmAdversary difference_matcher(int q_e, int q_p);

// Hidden-shift recovery with quantum cipher access (the diagnostic Q2 mode):
// collects parity constraints on k1 from the period of E(x) ^ P(x), then
// verifies candidate keys on held-back classical answers.
// max_iterations <= 0 selects 3n.
EmAdversary simon_distinguisher(int n, long max_iterations = 0);

// Single-run claw finder: classical difference table of the cipher, one
// amplitude-amplification search over the public oracle for a matching
// difference, decode and verify. Guesses 1 only on a verified key.
// forced_iterations >= 0 overrides the closed-form amplification count:
// deliberately under-iterating trades success probability for queries, which
// is how the advantage-vs-resources scaling is traced out.
EmAdversary claw_distinguisher(int n, uint64_t table_size, int forced_iterations = -1);

// All-classical difference matcher: cipher difference table of d_size pairs,
// t_size random public-oracle probes, verified decode.
EmAdversary birthday_distinguisher(int n, uint64_t d_size, uint64_t t_size);

// Makes exactly j+1 classical queries and then `probes` public-oracle probes
// (all landing in quantum stage j+1), guessing 1 on single-key-consistency
// evidence between a probe and a recorded pair. Built for measuring the
// adjacent-hybrid gap, which lives entirely in stage j+1.
EmAdversary stage_detector(int n, long j, long probes);

// Fixed two-classical-query, three-probe adversary whose guess is a
// deterministic function of the two classical answers; probe values exercise
// every oracle-switching stage and are appended to *probe_log when given.
// The distribution-equality tests compare the joint (answers, guess) cell.
EmAdversary tv_pair_adversary(int n, std::vector<uint64_t>* probe_log = nullptr);

// ---- shipped distinguisher roster -------------------------------------------

struct NamedDistinguisher {
  std::string name;
  double q_e = 0;  // charged classical-cipher queries for the bound column
  double q_p = 0;  // charged public-oracle queries for the bound column
  long sweep_trials = 0;  // 0: caller default; heavy strategies suggest fewer
  std::function<EmAdversary()> make;
};

// Everything the bound sweep runs in the two-sided game at width n.
std::vector<NamedDistinguisher> shipped_distinguishers(int n);

// Roster for the forward-only game (no inverse access anywhere).
std::vector<NamedDistinguisher> shipped_forward_only_distinguishers(int n);

// ---- lemma-game adversaries --------------------------------------------------

// Phase 1: q basis probes at uniform points, remembering the answers.
// Phase 2: recheck the oracle at whichever of the revealed s0, s1 were seen.
PermResampleAdversary canonical_perm_resampler(int n, long q);

// Phase 1: probes the fixed points 0..q-1. Phase 2: rechecks s if probed.
// Advantage approximately (q/2^m)(1 - 1/2^n).
FnResampleAdversary fn_fixed_point_prober(int m, long q);

// Sampler reprograms one uniform input to a fresh uniform output
// (epsilon = 2^-m exactly); the distinguisher checks the fixed input 0 once
// against the function it chose, then consults the revealed set.
ReprogramAdversary reprogram_fixed_point(int m, int n);

// Same sampler; the distinguisher walks inputs 0,1,2,... flipping a fair coin
// after each unchanged answer to decide whether to continue, so its query
// count is geometric with expectation near 2.
ReprogramAdversary reprogram_geometric(int m, int n);

// Sampler always emits the empty set: epsilon = 0, advantage exactly 0.
ReprogramAdversary reprogram_empty(int m, int n);

}  // namespace qemlab::games::strategies
