#include "qemlab/games/em_env.hpp"

#include "qemlab/common.hpp"

namespace qemlab::games {

EmOracleEnv::EmOracleEnv(int n, long max_classical, long max_quantum, Rng& rng)
    : n_(n), max_classical_(max_classical), max_quantum_(max_quantum), rng_(rng) {
  require(n >= 1 && n <= max_qubits(), "oracle environment: n out of range");
  require(max_classical >= 0 && max_quantum >= 0, "oracle environment: negative budget");
}

void EmOracleEnv::set_quantum_tables(std::span<const uint32_t> fwd, std::span<const uint32_t> inv) {
  const auto dim = static_cast<size_t>(1) << n_;
  require(fwd.size() == dim, "oracle environment: forward table has wrong size");
  require(inv.empty() || inv.size() == dim, "oracle environment: inverse table has wrong size");
  quantum_fwd_ = fwd;
  quantum_inv_ = inv;
}

void EmOracleEnv::set_cipher_quantum_tables(std::span<const uint32_t> fwd) {
  const auto dim = static_cast<size_t>(1) << n_;
  require(fwd.size() == dim, "oracle environment: cipher table has wrong size");
  cipher_fwd_ = fwd;
}

uint64_t EmOracleEnv::classical_query(Direction d, uint64_t v) {
  require(hooks_.classical != nullptr, "oracle environment: classical handler not wired");
  require(classical_used() < max_classical_, "classical query budget exceeded");
  require(v < (uint64_t{1} << n_), "classical query value out of range");
  for (const auto& e : transcript_.classical) {
    const uint64_t seen = d == Direction::forward ? e.x : e.y;
    require(seen != v, "redundant classical query");
  }
  const uint64_t answer = hooks_.classical(d, v);
  if (d == Direction::forward) {
    transcript_.classical.push_back({v, answer});
  } else {
    transcript_.classical.push_back({answer, v});
  }
  transcript_.stage_quantum.push_back(0);
  if (hooks_.after_classical) hooks_.after_classical();
  return answer;
}

void EmOracleEnv::charge_quantum(long cost) {
  require(cost >= 1, "oracle environment: nonpositive quantum cost");
  require(transcript_.total_quantum + cost <= max_quantum_, "quantum query budget exceeded");
  transcript_.total_quantum += cost;
  transcript_.stage_quantum.back() += cost;
}

uint64_t EmOracleEnv::quantum_probe(uint64_t x) {
  require(!quantum_fwd_.empty(), "oracle environment: quantum tables not wired");
  require(x < quantum_fwd_.size(), "quantum probe out of range");
  charge_quantum(1);
  return quantum_fwd_[x];
}

uint64_t EmOracleEnv::quantum_probe_inverse(uint64_t y) {
  require(!quantum_inv_.empty(), "inverse quantum access not available in this game");
  require(y < quantum_inv_.size(), "quantum probe out of range");
  charge_quantum(1);
  return quantum_inv_[y];
}

void EmOracleEnv::apply_public_xor(sim::StateVector& st, std::string_view in_reg,
                                   std::string_view out_reg, Direction d) {
  if (d == Direction::forward) {
    require(!quantum_fwd_.empty(), "oracle environment: quantum tables not wired");
    charge_quantum(1);
    sim::apply_xor_oracle(st, in_reg, out_reg, quantum_fwd_);
  } else {
    require(!quantum_inv_.empty(), "inverse quantum access not available in this game");
    charge_quantum(1);
    sim::apply_xor_oracle(st, in_reg, out_reg, quantum_inv_);
  }
}

void EmOracleEnv::apply_public_phase(
    sim::StateVector& st, std::string_view reg,
    const std::function<bool(uint64_t, std::span<const uint32_t>)>& pred, long oracle_evals) {
  require(!quantum_fwd_.empty(), "oracle environment: quantum tables not wired");
  require(pred != nullptr, "oracle environment: null phase predicate");
  charge_quantum(oracle_evals);
  const auto table = quantum_fwd_;
  sim::apply_phase_oracle(st, reg, [&](uint64_t u) { return pred(u, table); });
}

void EmOracleEnv::apply_cipher_xor(sim::StateVector& st, std::string_view in_reg,
                                   std::string_view out_reg) {
  require(!cipher_fwd_.empty(), "cipher quantum access not granted in this game");
  charge_quantum(1);
  sim::apply_xor_oracle(st, in_reg, out_reg, cipher_fwd_);
}

uint64_t EmOracleEnv::cipher_quantum_probe(uint64_t x) {
  require(!cipher_fwd_.empty(), "cipher quantum access not granted in this game");
  require(x < cipher_fwd_.size(), "quantum probe out of range");
  charge_quantum(1);
  return cipher_fwd_[x];
}

}  // namespace qemlab::games
