#pragma once

#include "qemlab/cipher.hpp"
#include "qemlab/games/em_env.hpp"
#include "qemlab/games/game.hpp"
#include "qemlab/rng.hpp"

namespace qemlab::games {

// Real-vs-ideal distinguishing game for the keyed construction
// E(x) = P(x ^ k1) ^ k2 with two-sided classical access. Real world: the
// classical oracle is E/E^{-1} and the quantum oracle is the public P.
// Ideal world: the classical oracle is an independent random permutation R;
// the quantum oracle is still P. Returns the completed transcript (guess,
// recorded pairs, stage-resolved quantum counts).
GameTranscript run_em_game(const EmAdversary& adv, int n, perm::KeyDistribution dist,
                           bool real_world, Rng& rng);

// Hybrid game number j in the chain joining the real game (j = 0) to the
// ideal game (j = classical budget). Classical queries 1..j are answered by
// R and the rest by E; after the (j+1)st classical query the quantum oracle
// switches from P to the reprogrammed permutation that folds the first j
// recorded pairs into P under the sampled key.
//
// primed = true selects the bridge variant: classical queries 1..j+1 are
// answered by R and the quantum switch folds in the first j+1 pairs instead
// (requires j < the adversary's classical budget). It differs from hybrid
// j+1 only in the quantum oracle of stage j+1.
GameTranscript run_hybrid(const EmAdversary& adv, int n, perm::KeyDistribution dist, long j,
                          bool primed, Rng& rng);

// The cut experiment at classical query j+1. Queries 1..j are answered by R;
// at query j+1 the runner samples a swap pair (s0, s1), forms
// P1 = P o swap(s0, s1), derives the key from the query value so that the
// answer equals the cipher answer under P1, and switches the quantum oracle
// to P1 reprogrammed with the first j pairs. Afterwards the classical oracle
// is the cipher built from P1. Three bad events are flagged:
//   bad1: the query-j+1 answer collides with a recorded value,
//   bad2: the hidden swap preimage collides with a recorded input,
//   bad3: a later classical query hits the one point where the P1-cipher and
//         the P-cipher disagree.
// primed = true additionally applies the corrective boxed actions: resample
// the colliding answer outside the recorded set, rebuild the quantum oracle
// from plain P with the first j+1 pairs when bad1 or bad2 fired, and answer
// phase-two queries with the P-cipher at the bad3 point. With no bad event
// the primed and unprimed runs are bit-for-bit identical.
GameTranscript run_expt(const EmAdversary& adv, int n, perm::KeyDistribution dist, long j,
                        bool primed, Rng& rng);

// Forward-only variant: E(x) = F(x ^ k) for a random *function* F and single
// key k; the ideal classical oracle is an independent random function R and
// quantum access is forward-only (inverse queries are rejected).
GameTranscript run_forward_only_game(const EmAdversary& adv, int n, bool real_world, Rng& rng);

// Hybrid chain for the forward-only variant; same schedule as run_hybrid
// with function reprogramming (recorded pairs overwrite F at x ^ k).
GameTranscript run_forward_only_hybrid(const EmAdversary& adv, int n, long j, bool primed,
                                       Rng& rng);

}  // namespace qemlab::games
