#include "qemlab/attacks/birthday.hpp"

#include <unordered_map>
#include <vector>

#include "attack_common.hpp"

namespace qemlab::attacks {

AttackResult classical_birthday_attack(int n, const std::function<uint64_t(uint64_t)>& e_oracle,
                                       const perm::Permutation& p, const BirthdayConfig& cfg,
                                       Rng& rng) {
  require(n >= 2 && n <= 24, "birthday: width must be in [2, 24]");
  require(p.bits() == n, "birthday: permutation width mismatch");
  require(cfg.delta != 0 && cfg.delta <= bit_mask(n),
          "birthday: delta must be a nonzero n-bit value");
  require(2 * cfg.d_size <= (uint64_t{1} << n), "birthday: table covers more than the domain");

  AttackResult res;
  if (cfg.d_size == 0) return res;  // nothing to match against; legal no-op run

  std::vector<char> used(uint64_t{1} << n, 0);
  const auto xs = detail::sample_pair_representatives(n, cfg.delta, cfg.d_size, &used, rng);
  std::vector<uint64_t> ex(xs.size());
  std::unordered_multimap<uint64_t, size_t> target_to_index;
  target_to_index.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    ex[i] = e_oracle(xs[i]);
    const uint64_t partner = e_oracle(xs[i] ^ cfg.delta);
    res.classical_queries += 2;
    target_to_index.emplace(ex[i] ^ partner, i);
  }

  const auto [v1, v2] = detail::pick_holdouts(n, used, rng);
  const uint64_t ev1 = e_oracle(v1);
  const uint64_t ev2 = e_oracle(v2);
  res.classical_queries += 2;

  for (uint64_t probe = 0; probe < cfg.t_size; ++probe) {
    const uint64_t u = rng.bits(n);
    const uint64_t pu = p.forward(u);
    const uint64_t gu = pu ^ p.forward(u ^ cfg.delta);
    res.classical_queries += 2;
    ++res.iterations;
    const auto [lo, hi] = target_to_index.equal_range(gu);
    for (auto it = lo; it != hi; ++it) {
      const uint64_t k1 = u ^ xs[it->second];
      const uint64_t k2 = ex[it->second] ^ pu;
      const uint64_t c1 = p.forward(v1 ^ k1) ^ k2;
      const uint64_t c2 = p.forward(v2 ^ k1) ^ k2;
      res.classical_queries += 2;
      if (ev1 == c1 && ev2 == c2) {
        res.success = true;
        res.key = {k1, k2};
        return res;
      }
      ++res.retries;  // chance match that failed verification; keep probing
    }
  }
  return res;
}

}  // namespace qemlab::attacks
