#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qemlab/games/csvio.hpp"

namespace qemlab::games {

// Shared run parameters for the experiment drivers. Every driver validates
// its inputs (throwing ConfigError), fans trials out to a worker pool, and
// returns finished result rows; (seed, parameters) determine every column
// except wall_time_ms.
struct RunOpts {
  int n = 0;
  std::string variant = "two-key";  // two-key | one-key; sweep also accepts forward-only
  long trials = 0;
  uint64_t seed = 1;
  int threads = 0;  // <= 0 selects the logical core count
};

// Key-recovery attacks: name in {simon-q2, q1-claw, birthday}. q_e / q_p are
// per-row budget lists (empty = one automatically sized row): q1-claw reads
// its difference-table size from q_e (2*table_size + 2 cipher queries);
// birthday reads d_size from q_e the same way and t_size from q_p; simon-q2
// accepts neither. Each row reports the success rate and the measured
// per-oracle query means alongside the distinguishing bound at those counts.
std::vector<ResultRow> drive_attack(const std::string& name, const RunOpts& opt,
                                    std::vector<long> q_e, std::vector<long> q_p);

// Resampling / reprogramming games: name in {resample-perm, resample-fn,
// reprogram}. q lists phase-1 budgets, one row each (resample games only;
// for n-bit domains the function game uses n-bit outputs). reprogram ignores
// q (q_given must be false) and emits one row per shipped strategy.
std::vector<ResultRow> drive_lemma(const std::string& name, const RunOpts& opt,
                                   const std::vector<long>& q, bool q_given);

// Hybrid-chain measurements with the fixed two-query probe adversary at cut
// j in {0, 1}: endpoint and cut-experiment TV rows, the adjacent-hybrid and
// corrected-cut gap rows with their bounds, and the bad-event frequency rows
// with their caps. primed selects the corrected cut experiment.
std::vector<ResultRow> drive_hybrid(const RunOpts& opt, long j, bool primed);

// Advantage-vs-bound grid over (q_e, q_p) for the classical difference
// matcher; both lists must be nonempty. variant forward-only plays the
// forward-only game and bound.
std::vector<ResultRow> drive_sweep(const RunOpts& opt, const std::vector<long>& q_e,
                                   const std::vector<long>& q_p);

}  // namespace qemlab::games
