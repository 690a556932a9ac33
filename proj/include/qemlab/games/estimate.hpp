#pragma once

#include <cstdint>
#include <functional>

#include "qemlab/rng.hpp"

namespace qemlab::games {

// One Monte-Carlo trial of one world: the guess bit plus an optional
// per-trial statistic (e.g. realized query count) averaged per world.
struct WorldOutcome {
  int guess = 0;
  double stat = 0.0;
};

// Runs one trial in the requested world with the supplied trial-specific
// generator. Must be safe to call concurrently from several threads.
using TrialRunner = std::function<WorldOutcome(bool world1, Rng& rng)>;

struct AdvantageEstimate {
  long trials = 0;
  double p_world1 = 0.0;  // fraction of guess == 1 in world 1
  double p_world0 = 0.0;  // fraction of guess == 1 in world 0
  double advantage = 0.0; // |p_world1 - p_world0|
  // 95% half-width for the advantage (normal approximation), floored at
  // 1/trials so a zero-variance run never reports an empty interval.
  double ci_halfwidth = 0.0;
  double mean_stat1 = 0.0;
  double mean_stat0 = 0.0;
};

// Estimates a distinguishing advantage over `trials` paired trial indices.
// Trial t of world w uses Rng::for_trial(seed, 2 * stream_tag + w, t), so
// results are reproducible and independent of thread count or scheduling.
// threads <= 0 selects the hardware concurrency.
AdvantageEstimate estimate_advantage(const TrialRunner& runner, long trials, uint64_t seed,
                                     int threads, uint64_t stream_tag);

// Runs fn(t) for every t in [0, trials) on a worker pool (threads <= 0
// selects the hardware concurrency). fn must derive all of its randomness
// from t and write only to trial-indexed slots, so results are independent
// of scheduling; the first exception is rethrown after the pool drains.
void run_trials(long trials, int threads, const std::function<void(long)>& fn);

}  // namespace qemlab::games
