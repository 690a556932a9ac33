#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "qemlab/games/game.hpp"
#include "qemlab/permutation.hpp"
#include "qemlab/reprogram.hpp"
#include "qemlab/rng.hpp"
#include "qemlab/statevector.hpp"

namespace qemlab::games {

// Quantum-only oracle handle for the resampling and reprogramming games.
// The game runner wires lookup tables and opens phases with a query budget;
// the adversary probes or applies the oracle onto its own statevectors.
class QuantumOracleEnv {
 public:
  QuantumOracleEnv(int in_bits, Rng& rng);

  void set_tables(std::span<const uint32_t> fwd, std::span<const uint32_t> inv);
  // Starts a new phase with `budget` oracle uses (>= 0).
  void begin_phase(long budget);

  int in_bits() const { return in_bits_; }
  long phase_used() const { return phase_used_; }
  long phase_budget() const { return phase_budget_; }
  long total_used() const { return total_used_; }
  Rng& rng() { return rng_; }

  uint64_t probe(uint64_t x);
  uint64_t probe_inverse(uint64_t y);
  void apply_xor(sim::StateVector& st, std::string_view in_reg, std::string_view out_reg,
                 Direction d = Direction::forward);
  void apply_phase(sim::StateVector& st, std::string_view reg,
                   const std::function<bool(uint64_t, std::span<const uint32_t>)>& pred,
                   long oracle_evals);

 private:
  void charge(long cost);

  int in_bits_;
  Rng& rng_;
  std::span<const uint32_t> fwd_;
  std::span<const uint32_t> inv_;
  long phase_budget_ = 0;
  long phase_used_ = 0;
  long total_used_ = 0;
};

// --- Function resampling game -----------------------------------------------
// A random function F : {0,1}^m -> {0,1}^n is offered for q quantum queries;
// then one uniform input s is resampled to a fresh uniform output. Given s and
// generous access to either the original or the resampled function, the
// distinguisher guesses which it got. Advantage bound: 1.5 * sqrt(q / 2^m).
struct FnResampleAdversary {
  long q = 0;               // phase-1 budget
  long phase2_budget = -1;  // < 0: defaults to 2^m
  std::function<void(QuantumOracleEnv&)> phase1;
  std::function<int(QuantumOracleEnv&, uint64_t s)> phase2;
};

int run_fn_resample_game(const FnResampleAdversary& adv, int m, int n, bool resampled, Rng& rng);

// --- Permutation resampling game ---------------------------------------------
// Same shape for a random permutation on n bits with two-sided access; the
// resampling step swaps the images of two uniform points s0, s1 (i.e. the
// oracle becomes P o swap(s0, s1)), and both points are revealed. Advantage
// bound: 4 * sqrt(q / 2^n).
struct PermResampleAdversary {
  long q = 0;
  long phase2_budget = -1;  // < 0: defaults to 2^n
  std::function<void(QuantumOracleEnv&)> phase1;
  std::function<int(QuantumOracleEnv&, uint64_t s0, uint64_t s1)> phase2;
};

int run_perm_resample_game(const PermResampleAdversary& adv, int n, bool resampled, Rng& rng);

// --- Arbitrary reprogramming game --------------------------------------------
// The adversary supplies the base function F itself and a randomized sampler
// whose output set B of (input, output) pairs reprograms F. It then gets
// adaptive quantum access to either F or the reprogrammed function, after
// which it may reveal B (closing the oracle) and guess. epsilon must be the
// exact per-point inclusion bound max_x Pr[x in B]; the advantage bound is
// 2 * E[queries | unprogrammed] * sqrt(epsilon).
struct ReprogramAdversary {
  int m = 0;
  int n = 0;
  long phase2_budget = 0;
  double epsilon = 0.0;
  std::function<perm::FunctionTable(Rng&)> choose_f;
  std::function<perm::ReprogramSet(Rng&)> sample_b;
  // Optional equiprobable listing of the input sets the sampler can emit,
  // for computing epsilon exactly; when absent, `epsilon` is taken as the
  // exact analytic value supplied with the strategy.
  std::function<std::vector<std::vector<uint64_t>>()> enumerate_b_inputs;
  // Oracle phase plus decision: query env while adaptive access is open; call
  // reveal() to obtain B, which closes the oracle; return the guess.
  std::function<int(QuantumOracleEnv&, const perm::FunctionTable& f,
                    const std::function<const perm::ReprogramSet&()>& reveal)>
      run_phases;
};

struct ReprogramResult {
  int guess = 0;
  long queries = 0;  // oracle uses before the reveal
};

ReprogramResult run_reprogram_game(const ReprogramAdversary& adv, bool reprogrammed, Rng& rng);

// Exact per-point inclusion bound max_x Pr[x in B]: computed by enumeration
// when the strategy lists its sampler's support (domains up to 2^12), else
// the strategy's declared exact value.
double reprogram_exact_epsilon(const ReprogramAdversary& adv);

}  // namespace qemlab::games
