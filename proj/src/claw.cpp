#include "qemlab/attacks/claw.hpp"

#include <unordered_map>
#include <vector>

#include "attack_common.hpp"
#include "qemlab/attacks/grover.hpp"

namespace qemlab::attacks {

using detail::pick_holdouts;
using detail::sample_pair_representatives;

uint64_t claw_marked_hint(int n, uint64_t table_size) {
  const uint64_t size = uint64_t{1} << n;
  const uint64_t true_marked = 2 * table_size;
  if (true_marked >= size) return size;
  // Chance matches: each remaining input hits one of table_size targets
  // with probability ~ table_size / 2^n.
  const uint64_t expected_false =
      (table_size * (size - true_marked) + size / 2) / size;
  return true_marked + expected_false;
}

double claw_run_success_prediction(int n, long marked, long verifying, int iterations) {
  if (marked <= 0) return 0.0;
  return grover_success_probability(n, static_cast<uint64_t>(marked), iterations) *
         (static_cast<double>(verifying) / static_cast<double>(marked));
}

AttackResult q1_claw_attack(int n, const perm::Permutation& p,
                            const std::function<uint64_t(uint64_t)>& e_oracle,
                            const ClawConfig& cfg, Rng& rng) {
  require(n >= 2 && n <= 18, "claw: width must be in [2, 18]");
  require(p.bits() == n, "claw: permutation width mismatch");
  require(cfg.delta != 0 && cfg.delta <= bit_mask(n), "claw: delta must be a nonzero n-bit value");
  require(cfg.table_size >= 1, "claw: table_size must be at least 1");
  require(2 * cfg.table_size <= (uint64_t{1} << n), "claw: table covers more than the domain");
  require(cfg.max_retries >= 0, "claw: retry cap must be nonnegative");

  AttackResult res;

  // Phase 1: classical cipher queries.
  std::vector<char> used(uint64_t{1} << n, 0);
  const auto xs = sample_pair_representatives(n, cfg.delta, cfg.table_size, &used, rng);
  std::vector<uint64_t> ex(xs.size());
  std::unordered_multimap<uint64_t, size_t> target_to_index;
  target_to_index.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    ex[i] = e_oracle(xs[i]);
    const uint64_t partner = e_oracle(xs[i] ^ cfg.delta);
    res.classical_queries += 2;
    target_to_index.emplace(ex[i] ^ partner, i);
  }

  const auto [v1, v2] = pick_holdouts(n, used, rng);
  const uint64_t ev1 = e_oracle(v1);
  const uint64_t ev2 = e_oracle(v2);
  res.classical_queries += 2;

  const auto g = [&](uint64_t u) {
    return p.forward(u) ^ p.forward(u ^ cfg.delta);
  };
  const auto predicate = [&](uint64_t u) {
    return target_to_index.contains(g(u));
  };
  // Decodes a hit (no-op on a non-hit); counts classical permutation lookups
  // and fills the key on success.
  const auto decode_and_verify = [&](uint64_t u) {
    const uint64_t pu = p.forward(u);
    const uint64_t gu = pu ^ p.forward(u ^ cfg.delta);
    res.classical_queries += 2;
    const auto [lo, hi] = target_to_index.equal_range(gu);
    for (auto it = lo; it != hi; ++it) {
      const uint64_t k1 = u ^ xs[it->second];
      const uint64_t k2 = ex[it->second] ^ pu;
      const uint64_t c1 = p.forward(v1 ^ k1) ^ k2;
      const uint64_t c2 = p.forward(v2 ^ k1) ^ k2;
      res.classical_queries += 2;
      if (ev1 == c1 && ev2 == c2) {
        res.key = {k1, k2};
        return true;
      }
    }
    return false;
  };

  if (cfg.exhaustive) {
    res.marked_count = 0;
    res.verifying_count = 0;
    perm::Key first{};
    for (uint64_t u = 0; u < (uint64_t{1} << n); ++u) {
      if (!predicate(u)) continue;
      ++res.marked_count;
      if (decode_and_verify(u)) {
        if (res.verifying_count == 0) first = res.key;
        ++res.verifying_count;
      }
    }
    res.success = res.verifying_count > 0;
    res.key = first;
    return res;
  }

  const uint64_t hint = claw_marked_hint(n, cfg.table_size);
  for (int run = 0; run <= cfg.max_retries; ++run) {
    if (run > 0) ++res.retries;
    const auto outcome = grover_multi_target(n, predicate, hint, rng);
    res.iterations += outcome.iterations;
    // Two permutation evaluations per phase-oracle application.
    res.quantum_queries += 2 * outcome.iterations;
    if (decode_and_verify(outcome.candidate)) {
      res.success = true;
      return res;
    }
  }
  return res;
}

}  // namespace qemlab::attacks
