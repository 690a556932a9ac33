#include "qemlab/games/lemma_games.hpp"

#include <algorithm>

#include "qemlab/cipher.hpp"
#include "qemlab/common.hpp"

namespace qemlab::games {

using perm::FunctionTable;
using perm::Permutation;
using perm::ReprogramSet;

QuantumOracleEnv::QuantumOracleEnv(int in_bits, Rng& rng) : in_bits_(in_bits), rng_(rng) {
  require(in_bits >= 1 && in_bits <= max_qubits(), "oracle environment: width out of range");
}

void QuantumOracleEnv::set_tables(std::span<const uint32_t> fwd, std::span<const uint32_t> inv) {
  const auto dim = static_cast<size_t>(1) << in_bits_;
  require(fwd.size() == dim, "oracle environment: forward table has wrong size");
  require(inv.empty() || inv.size() == dim, "oracle environment: inverse table has wrong size");
  fwd_ = fwd;
  inv_ = inv;
}

void QuantumOracleEnv::begin_phase(long budget) {
  require(budget >= 0, "oracle environment: negative phase budget");
  phase_budget_ = budget;
  phase_used_ = 0;
}

void QuantumOracleEnv::charge(long cost) {
  require(cost >= 1, "oracle environment: nonpositive query cost");
  require(phase_used_ + cost <= phase_budget_, "oracle phase budget exceeded");
  phase_used_ += cost;
  total_used_ += cost;
}

uint64_t QuantumOracleEnv::probe(uint64_t x) {
  require(!fwd_.empty(), "oracle environment: tables not wired");
  require(x < fwd_.size(), "probe out of range");
  charge(1);
  return fwd_[x];
}

uint64_t QuantumOracleEnv::probe_inverse(uint64_t y) {
  require(!inv_.empty(), "inverse access not available in this game");
  require(y < inv_.size(), "probe out of range");
  charge(1);
  return inv_[y];
}

void QuantumOracleEnv::apply_xor(sim::StateVector& st, std::string_view in_reg,
                                 std::string_view out_reg, Direction d) {
  if (d == Direction::forward) {
    require(!fwd_.empty(), "oracle environment: tables not wired");
    charge(1);
    sim::apply_xor_oracle(st, in_reg, out_reg, fwd_);
  } else {
    require(!inv_.empty(), "inverse access not available in this game");
    charge(1);
    sim::apply_xor_oracle(st, in_reg, out_reg, inv_);
  }
}

void QuantumOracleEnv::apply_phase(
    sim::StateVector& st, std::string_view reg,
    const std::function<bool(uint64_t, std::span<const uint32_t>)>& pred, long oracle_evals) {
  require(!fwd_.empty(), "oracle environment: tables not wired");
  require(pred != nullptr, "oracle environment: null phase predicate");
  charge(oracle_evals);
  const auto table = fwd_;
  sim::apply_phase_oracle(st, reg, [&](uint64_t u) { return pred(u, table); });
}

int run_fn_resample_game(const FnResampleAdversary& adv, int m, int n, bool resampled, Rng& rng) {
  require(adv.phase1 != nullptr && adv.phase2 != nullptr, "game: adversary phases not wired");
  require(adv.q >= 0, "game: negative phase-1 budget");
  const FunctionTable f = FunctionTable::sample(m, n, rng);

  QuantumOracleEnv env(m, rng);
  env.set_tables(f.table(), {});
  env.begin_phase(adv.q);
  adv.phase1(env);

  const uint64_t s = rng.bits(m);
  const uint64_t y = rng.bits(n);
  const FunctionTable f1 = perm::fn_reprogram_point(f, s, y);

  env.set_tables(resampled ? f1.table() : f.table(), {});
  env.begin_phase(adv.phase2_budget >= 0 ? adv.phase2_budget : (int64_t{1} << m));
  return adv.phase2(env, s);
}

int run_perm_resample_game(const PermResampleAdversary& adv, int n, bool resampled, Rng& rng) {
  require(adv.phase1 != nullptr && adv.phase2 != nullptr, "game: adversary phases not wired");
  require(adv.q >= 0, "game: negative phase-1 budget");
  const Permutation p = Permutation::sample(n, rng);

  QuantumOracleEnv env(n, rng);
  env.set_tables(p.table(), p.inverse_table());
  env.begin_phase(adv.q);
  adv.phase1(env);

  const uint64_t s0 = rng.bits(n);
  const uint64_t s1 = rng.bits(n);
  const Permutation p1 = perm::compose(p, perm::make_swap(n, s0, s1));

  if (resampled) {
    env.set_tables(p1.table(), p1.inverse_table());
  } else {
    env.set_tables(p.table(), p.inverse_table());
  }
  env.begin_phase(adv.phase2_budget >= 0 ? adv.phase2_budget : (int64_t{1} << n));
  return adv.phase2(env, s0, s1);
}

ReprogramResult run_reprogram_game(const ReprogramAdversary& adv, bool reprogrammed, Rng& rng) {
  require(adv.choose_f != nullptr && adv.sample_b != nullptr && adv.run_phases != nullptr,
          "game: adversary phases not wired");
  require(adv.phase2_budget >= 0, "game: negative oracle budget");
  const FunctionTable f = adv.choose_f(rng);
  require(f.in_bits() == adv.m && f.out_bits() == adv.n,
          "game: chosen function has wrong dimensions");
  const ReprogramSet b = adv.sample_b(rng);
  for (const auto& [input, output] : b.pairs()) {
    require(input < f.domain_size(), "game: reprogram input out of range");
    require(output < (uint64_t{1} << adv.n), "game: reprogram output out of range");
  }
  const FunctionTable f1 = perm::fn_reprogram_set(f, b);

  QuantumOracleEnv env(adv.m, rng);
  env.set_tables(reprogrammed ? f1.table() : f.table(), {});
  env.begin_phase(adv.phase2_budget);

  ReprogramResult result;
  bool revealed = false;
  auto reveal = [&]() -> const ReprogramSet& {
    if (!revealed) {
      revealed = true;
      result.queries = env.phase_used();
      env.begin_phase(0);  // the reveal closes the oracle
    }
    return b;
  };
  result.guess = adv.run_phases(env, f, reveal);
  if (!revealed) result.queries = env.phase_used();
  return result;
}

double reprogram_exact_epsilon(const ReprogramAdversary& adv) {
  if (!adv.enumerate_b_inputs) return adv.epsilon;
  require(adv.m >= 1 && adv.m <= 12, "exact epsilon enumeration limited to domains up to 2^12");
  const auto support = adv.enumerate_b_inputs();
  require(!support.empty(), "exact epsilon: empty sampler support");
  std::vector<long> hits(static_cast<size_t>(1) << adv.m, 0);
  for (const auto& inputs : support) {
    for (uint64_t x : inputs) {
      require(x < hits.size(), "exact epsilon: input out of range");
      ++hits[x];
    }
  }
  long worst = 0;
  for (long h : hits) worst = std::max(worst, h);
  return static_cast<double>(worst) / static_cast<double>(support.size());
}

}  // namespace qemlab::games
