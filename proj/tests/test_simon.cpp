#include <doctest.h>

#include <bit>
#include <cmath>
#include <complex>
#include <vector>

#include "qemlab/attacks/simon.hpp"
#include "qemlab/cipher.hpp"
#include "qemlab/statevector.hpp"

using namespace qemlab;
using namespace qemlab::attacks;

namespace {

std::vector<uint32_t> cipher_table(const perm::Permutation& p, const perm::Key& k) {
  std::vector<uint32_t> t(p.domain_size());
  for (uint64_t x = 0; x < t.size(); ++x)
    t[x] = static_cast<uint32_t>(perm::em_forward(p, k, x));
  return t;
}

int parity(uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

TEST_CASE("one iteration at n=2 only yields vectors orthogonal to the period") {
  // Hand-derived: with f(x) = E(x) ^ P(x) and k1 = 11, the post-Hadamard
  // amplitude of (u, v) is (1/4) * sum over {x : f(x) = v} of (-1)^(u.x),
  // which vanishes unless u.k1 = 0, i.e. u in {00, 11}.
  Rng rng(11);
  const auto p = perm::Permutation::sample(2, rng);
  const perm::Key k{3, rng.bits(2)};
  const auto e_table = cipher_table(p, k);

  std::vector<uint64_t> f(4);
  for (uint64_t x = 0; x < 4; ++x) f[x] = e_table[x] ^ p.forward(x);

  // Independent amplitude computation.
  std::vector<double> expected(4, 0.0);
  for (uint64_t u = 0; u < 4; ++u) {
    for (uint64_t v = 0; v < 4; ++v) {
      double a = 0.0;
      for (uint64_t x = 0; x < 4; ++x)
        if (f[x] == v) a += parity(u & x) ? -0.25 : 0.25;
      expected[u] += a * a;
    }
  }
  CHECK(expected[1] == doctest::Approx(0.0));
  CHECK(expected[2] == doctest::Approx(0.0));
  CHECK(expected[0] + expected[3] == doctest::Approx(1.0));

  // The simulated circuit reproduces that distribution exactly.
  sim::RegisterLayout layout({{"X", 2}, {"Y", 2}});
  auto st = sim::init_basis_state(layout, {{"X", 0}, {"Y", 0}});
  sim::apply_hadamard(st, "X");
  sim::apply_xor_oracle(st, "X", "Y", e_table);
  sim::apply_xor_oracle(st, "X", "Y", p.table());
  sim::apply_hadamard(st, "X");
  for (uint64_t u = 0; u < 4; ++u)
    CHECK(sim::probability_of(st, "X", u) == doctest::Approx(expected[u]));

  // And every measurement lands in the orthogonal set.
  for (int rep = 0; rep < 50; ++rep) {
    auto st2 = sim::init_basis_state(layout, {{"X", 0}, {"Y", 0}});
    sim::apply_hadamard(st2, "X");
    sim::apply_xor_oracle(st2, "X", "Y", e_table);
    sim::apply_xor_oracle(st2, "X", "Y", p.table());
    sim::apply_hadamard(st2, "X");
    const uint64_t u = sim::measure_register(st2, "X", rng);
    CHECK(parity(u & k.k1) == 0);
  }
}

TEST_CASE("measured rows stay orthogonal to the period at n=6") {
  Rng rng(12);
  const auto p = perm::Permutation::sample(6, rng);
  const perm::Key k{rng.bits(6), rng.bits(6)};
  const auto e_table = cipher_table(p, k);
  sim::RegisterLayout layout({{"X", 6}, {"Y", 6}});
  for (int rep = 0; rep < 60; ++rep) {
    auto st = sim::init_basis_state(layout, {{"X", 0}, {"Y", 0}});
    sim::apply_hadamard(st, "X");
    sim::apply_xor_oracle(st, "X", "Y", e_table);
    sim::apply_xor_oracle(st, "X", "Y", p.table());
    sim::apply_hadamard(st, "X");
    CHECK(parity(sim::measure_register(st, "X", rng) & k.k1) == 0);
  }
}

TEST_CASE("full key recovery at n=6") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = perm::Permutation::sample(6, rng);
    const perm::Key k{rng.bits(6), rng.bits(6)};
    const auto res = simon_q2_attack(6, p, k, rng);
    REQUIRE(res.success);
    CHECK(res.key == k);
    CHECK(res.quantum_queries <= 6 * 6);
    CHECK(res.quantum_queries == 2 * res.iterations);
  }
}

TEST_CASE("degenerate zero period is recovered without quantum work") {
  Rng rng(14);
  const auto p = perm::Permutation::sample(6, rng);
  const perm::Key k{0, rng.bits(6)};
  const auto res = simon_q2_attack(6, p, k, rng);
  REQUIRE(res.success);
  CHECK(res.key == k);
  CHECK(res.quantum_queries == 0);
}

TEST_CASE("n=8: at least 95 of 100 trials succeed within 6n quantum queries") {
  Rng rng(15);
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = perm::Permutation::sample(8, rng);
    const perm::Key k = perm::sample_key(perm::KeyDistribution::two_key_uniform, 8, rng);
    const auto res = simon_q2_attack(8, p, k, rng);
    if (res.success) {
      CHECK(res.key == k);
      CHECK(res.quantum_queries <= 6 * 8);
      ++ok;
    }
  }
  CHECK(ok >= 95);
}

TEST_CASE("input validation") {
  Rng rng(16);
  const auto p = perm::Permutation::sample(4, rng);
  CHECK_THROWS_AS(simon_q2_attack(5, p, perm::Key{1, 2}, rng), ConfigError);
  std::vector<uint32_t> short_table(8, 0);
  long a = 0, b = 0, c = 0;
  CHECK_THROWS_AS(simon_q2_core(4, short_table, short_table, rng, 0, &a, &b, &c), ConfigError);
}
