#include "qemlab/attacks/simon.hpp"

#include <vector>

#include "qemlab/gf2.hpp"
#include "qemlab/statevector.hpp"

namespace qemlab::attacks {

namespace {

// Derives k2 from the pair at x = 0, then checks the key on x = 1 and x = 2.
// Each probed x costs one classical E lookup and one classical P lookup.
bool verify_candidate(uint64_t k1_cand, std::span<const uint32_t> e_table,
                      std::span<const uint32_t> p_table, uint64_t* k2_out, AttackResult* res,
                      long* e_classical_uses) {
  const uint64_t k2 = uint64_t{e_table[0]} ^ p_table[k1_cand];
  res->classical_queries += 2;
  *e_classical_uses += 1;
  for (uint64_t x = 1; x <= 2; ++x) {
    res->classical_queries += 2;
    *e_classical_uses += 1;
    if (e_table[x] != (p_table[x ^ k1_cand] ^ k2)) return false;
  }
  *k2_out = k2;
  return true;
}

}  // namespace

AttackResult simon_q2_core(int n, std::span<const uint32_t> e_table,
                           std::span<const uint32_t> p_table, Rng& rng, int max_iterations,
                           long* e_quantum_uses, long* p_quantum_uses,
                           long* e_classical_uses) {
  require(n >= 2, "simon: width must be at least 2");
  require(e_table.size() == (uint64_t{1} << n) && p_table.size() == e_table.size(),
          "simon: oracle tables must have 2^n entries");
  if (max_iterations <= 0) max_iterations = 3 * n;

  AttackResult res;
  uint64_t k2 = 0;

  // Degenerate period: k1 = 0 makes E(x) ^ P(x) constant and every measured
  // row is 0, so the linear system can never reach rank n-1. Check it first.
  if (verify_candidate(0, e_table, p_table, &k2, &res, e_classical_uses)) {
    res.success = true;
    res.key = {0, k2};
    return res;
  }

  sim::RegisterLayout layout({{"X", n}, {"Y", n}});
  Gf2Solver solver(n);
  for (int it = 0; it < max_iterations; ++it) {
    auto st = sim::init_basis_state(layout, {{"X", 0}, {"Y", 0}});
    sim::apply_hadamard(st, "X");
    sim::apply_xor_oracle(st, "X", "Y", e_table);
    sim::apply_xor_oracle(st, "X", "Y", p_table);
    sim::apply_hadamard(st, "X");
    const uint64_t u = sim::measure_register(st, "X", rng);
    ++res.iterations;
    res.quantum_queries += 2;
    *e_quantum_uses += 1;
    *p_quantum_uses += 1;

    solver.add_row(u);
    if (solver.rank() < n - 1) continue;

    // Rank n-1 leaves a single nonzero vector in the nullspace: the period.
    const auto basis = solver.nullspace_basis();
    const uint64_t cand = basis.size() == 1 ? basis[0] : 0;
    if (cand != 0 && verify_candidate(cand, e_table, p_table, &k2, &res, e_classical_uses)) {
      res.success = true;
      res.key = {cand, k2};
      return res;
    }
    solver = Gf2Solver(n);
    ++res.retries;
  }
  return res;
}

AttackResult simon_q2_attack(int n, const perm::Permutation& p, const perm::Key& k, Rng& rng,
                             int max_iterations) {
  require(p.bits() == n, "simon: permutation width mismatch");
  const uint64_t size = p.domain_size();
  std::vector<uint32_t> e_table(size);
  for (uint64_t x = 0; x < size; ++x)
    e_table[x] = static_cast<uint32_t>(perm::em_forward(p, k, x));
  long eq = 0, pq = 0, ec = 0;
  return simon_q2_core(n, e_table, p.table(), rng, max_iterations, &eq, &pq, &ec);
}

}  // namespace qemlab::attacks
