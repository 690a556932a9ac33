#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "qemlab/games/game.hpp"
#include "qemlab/rng.hpp"
#include "qemlab/statevector.hpp"

namespace qemlab::games {

class EmOracleEnv;

// Declared-budget strategy for the cipher distinguishing games. run() drives
// the environment imperatively and returns the guess bit. Strategies own
// their statevectors; the environment applies oracles onto them and keeps
// the query accounting.
struct EmAdversary {
  long max_classical = 0;
  long max_quantum = 0;
  // Diagnostic mode: grants a quantum XOR oracle for the classical (cipher)
  // side as well, outside the model the bounds govern.
  bool cipher_quantum_access = false;
  std::function<int(EmOracleEnv&)> run;
};

// Oracle front end shared by every cipher game. A game runner wires the
// classical handler and the current quantum tables; the adversary sees only
// the query interface. Classical pairs are recorded in canonical (input,
// output) orientation regardless of query direction, one quantum-count stage
// opens per classical query, and budgets are enforced on every call.
class EmOracleEnv {
 public:
  struct Hooks {
    // Computes the classical answer for (direction, value). Runs before the
    // pair is recorded; may switch the quantum tables for the next stage.
    std::function<uint64_t(Direction, uint64_t)> classical;
    // Optional; runs after the pair is recorded.
    std::function<void()> after_classical;
  };

  EmOracleEnv(int n, long max_classical, long max_quantum, Rng& rng);

  // --- game-runner wiring ---
  void set_hooks(Hooks hooks) { hooks_ = std::move(hooks); }
  void set_quantum_tables(std::span<const uint32_t> fwd, std::span<const uint32_t> inv);
  void set_cipher_quantum_tables(std::span<const uint32_t> fwd);
  GameTranscript& transcript() { return transcript_; }
  const GameTranscript& transcript() const { return transcript_; }

  // --- adversary-facing interface ---
  int n() const { return n_; }
  long classical_budget() const { return max_classical_; }
  long quantum_budget() const { return max_quantum_; }
  long classical_used() const { return static_cast<long>(transcript_.classical.size()); }
  long quantum_used() const { return transcript_.total_quantum; }
  Rng& rng() { return rng_; }

  // One classical query. Rejects budget overruns and redundant queries (a
  // forward query on a known input or an inverse query on a known output).
  uint64_t classical_query(Direction d, uint64_t v);

  // Basis-state uses of the public quantum oracle (cost 1 each).
  uint64_t quantum_probe(uint64_t x);
  uint64_t quantum_probe_inverse(uint64_t y);

  // |x>|y> -> |x>|y ^ O(x)> with the current public oracle (cost 1).
  void apply_public_xor(sim::StateVector& st, std::string_view in_reg, std::string_view out_reg,
                        Direction d = Direction::forward);

  // Phase flip where pred(u, table) holds, with the current public forward
  // table; costs `oracle_evals` (the evaluations the predicate performs per
  // oracle application).
  void apply_public_phase(sim::StateVector& st, std::string_view reg,
                          const std::function<bool(uint64_t, std::span<const uint32_t>)>& pred,
                          long oracle_evals);

  // Diagnostic quantum access to the cipher side (requires the adversary's
  // cipher_quantum_access flag; forward only; cost 1 quantum query each).
  void apply_cipher_xor(sim::StateVector& st, std::string_view in_reg, std::string_view out_reg);
  uint64_t cipher_quantum_probe(uint64_t x);

 private:
  void charge_quantum(long cost);

  int n_;
  long max_classical_;
  long max_quantum_;
  Rng& rng_;
  Hooks hooks_;
  std::span<const uint32_t> quantum_fwd_;
  std::span<const uint32_t> quantum_inv_;
  std::span<const uint32_t> cipher_fwd_;
  GameTranscript transcript_;
};

}  // namespace qemlab::games
