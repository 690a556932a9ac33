#include <doctest.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "qemlab/cipher.hpp"
#include "qemlab/common.hpp"
#include "qemlab/games/em_game.hpp"
#include "qemlab/games/game.hpp"
#include "qemlab/games/stats.hpp"
#include "qemlab/games/strategies.hpp"
#include "qemlab/layout.hpp"
#include "qemlab/permutation.hpp"
#include "qemlab/reprogram.hpp"
#include "qemlab/rng.hpp"
#include "qemlab/statevector.hpp"

namespace games = qemlab::games;
namespace strategies = qemlab::games::strategies;
namespace perm = qemlab::perm;
namespace sim = qemlab::sim;
using games::Direction;
using games::EmAdversary;
using games::EmOracleEnv;
using games::GameTranscript;
using perm::KeyDistribution;
using qemlab::ConfigError;
using qemlab::Rng;

namespace {

bool same_transcript(const GameTranscript& a, const GameTranscript& b) {
  if (a.classical.size() != b.classical.size()) return false;
  for (size_t i = 0; i < a.classical.size(); ++i) {
    if (a.classical[i].x != b.classical[i].x || a.classical[i].y != b.classical[i].y) return false;
  }
  return a.stage_quantum == b.stage_quantum && a.total_quantum == b.total_quantum &&
         a.guess == b.guess && a.flags == b.flags;
}

// Per-stage probe dump: reads the full forward table (and one inverse point)
// of the public oracle before the first and after every classical query.
struct SpyLog {
  std::vector<std::vector<uint64_t>> stages;
  std::vector<uint64_t> inv0;
};

EmAdversary make_spy(int n, std::vector<std::pair<Direction, uint64_t>> queries, SpyLog* log,
                     bool with_inverse = true) {
  const uint64_t dim = uint64_t{1} << n;
  EmAdversary a;
  a.max_classical = static_cast<long>(queries.size());
  a.max_quantum = static_cast<long>((queries.size() + 1) * (dim + (with_inverse ? 1 : 0)));
  a.run = [queries = std::move(queries), log, with_inverse, dim](EmOracleEnv& env) {
    for (size_t s = 0; s <= queries.size(); ++s) {
      std::vector<uint64_t> table(dim);
      for (uint64_t x = 0; x < dim; ++x) table[x] = env.quantum_probe(x);
      log->stages.push_back(std::move(table));
      if (with_inverse) log->inv0.push_back(env.quantum_probe_inverse(0));
      if (s < queries.size()) env.classical_query(queries[s].first, queries[s].second);
    }
    return 0;
  };
  return a;
}

void check_stage_matches(const std::vector<uint64_t>& probed, const perm::Permutation& expect) {
  REQUIRE(probed.size() == expect.domain_size());
  for (uint64_t x = 0; x < probed.size(); ++x) REQUIRE(probed[x] == expect.forward(x));
}

}  // namespace

TEST_CASE("oracle environment: budgets, redundancy, stage accounting") {
  const int n = 3;
  Rng rng(11);

  SUBCASE("a repeated forward input is rejected") {
    EmAdversary a;
    a.max_classical = 2;
    a.run = [](EmOracleEnv& env) {
      env.classical_query(Direction::forward, 5);
      env.classical_query(Direction::forward, 5);
      return 0;
    };
    CHECK_THROWS_AS(games::run_em_game(a, n, KeyDistribution::two_key_uniform, true, rng), ConfigError);
  }

  SUBCASE("an inverse query on a known output is rejected") {
    EmAdversary a;
    a.max_classical = 2;
    a.run = [](EmOracleEnv& env) {
      const uint64_t y = env.classical_query(Direction::forward, 3);
      env.classical_query(Direction::inverse, y);
      return 0;
    };
    CHECK_THROWS_AS(games::run_em_game(a, n, KeyDistribution::two_key_uniform, true, rng), ConfigError);
  }

  SUBCASE("inverse classical queries are recorded in canonical orientation") {
    EmAdversary a;
    a.max_classical = 1;
    a.run = [](EmOracleEnv& env) {
      env.classical_query(Direction::inverse, 5);
      return 0;
    };
    const auto gt = games::run_em_game(a, n, KeyDistribution::two_key_uniform, true, rng);
    REQUIRE(gt.classical.size() == 1);
    CHECK(gt.classical[0].y == 5);
  }

  SUBCASE("classical budget") {
    EmAdversary a;
    a.max_classical = 1;
    a.run = [](EmOracleEnv& env) {
      env.classical_query(Direction::forward, 0);
      env.classical_query(Direction::forward, 1);
      return 0;
    };
    CHECK_THROWS_AS(games::run_em_game(a, n, KeyDistribution::two_key_uniform, true, rng), ConfigError);
  }

  SUBCASE("quantum budget counts basis probes") {
    EmAdversary a;
    a.max_quantum = 2;
    a.run = [](EmOracleEnv& env) {
      env.quantum_probe(0);
      env.quantum_probe(1);
      env.quantum_probe(2);
      return 0;
    };
    CHECK_THROWS_AS(games::run_em_game(a, n, KeyDistribution::two_key_uniform, true, rng), ConfigError);
  }

  SUBCASE("phase applications charge their declared evaluation count") {
    EmAdversary a;
    a.max_quantum = 4;
    a.run = [n](EmOracleEnv& env) {
      sim::RegisterLayout layout({{"u", n}});
      auto st = sim::init_basis_state(layout, {{"u", uint64_t{0}}});
      env.apply_public_phase(
          st, "u", [](uint64_t, std::span<const uint32_t>) { return false; }, 3);
      CHECK(env.quantum_used() == 3);
      env.quantum_probe(0);
      CHECK(env.quantum_used() == 4);
      env.quantum_probe(1);  // fifth unit: over budget
      return 0;
    };
    CHECK_THROWS_AS(games::run_em_game(a, n, KeyDistribution::two_key_uniform, true, rng), ConfigError);
  }

  SUBCASE("cipher-side quantum access needs the diagnostic flag") {
    EmAdversary a;
    a.max_quantum = 1;
    a.cipher_quantum_access = false;
    a.run = [](EmOracleEnv& env) {
      env.cipher_quantum_probe(0);
      return 0;
    };
    CHECK_THROWS_AS(games::run_em_game(a, n, KeyDistribution::two_key_uniform, true, rng), ConfigError);
  }

  SUBCASE("one quantum stage per classical query") {
    EmAdversary a;
    a.max_classical = 2;
    a.max_quantum = 5;
    a.run = [](EmOracleEnv& env) {
      env.quantum_probe(0);
      env.quantum_probe(1);
      env.classical_query(Direction::forward, 0);
      env.quantum_probe(2);
      env.classical_query(Direction::forward, 1);
      env.quantum_probe(3);
      env.quantum_probe(4);
      return 1;
    };
    const auto gt = games::run_em_game(a, n, KeyDistribution::two_key_uniform, true, rng);
    CHECK(gt.stage_quantum == std::vector<long>{2, 1, 2});
    CHECK(gt.total_quantum == 5);
    CHECK(gt.guess == 1);
    CHECK(gt.consistent());
  }
}

TEST_CASE("real-world classical answers match the cipher rebuilt from the drawn key") {
  // The game draws (P, R, key) from the caller's generator in a documented
  // order, so a replay with the same seed recovers the hidden values.
  const int n = 4;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    for (auto dist : {KeyDistribution::two_key_uniform, KeyDistribution::one_key}) {
      Rng replay(seed);
      const auto p = perm::Permutation::sample(n, replay);
      const auto r = perm::Permutation::sample(n, replay);
      const auto key = perm::sample_key(dist, n, replay);

      EmAdversary a;
      a.max_classical = 3;
      a.run = [](EmOracleEnv& env) {
        const uint64_t y1 = env.classical_query(Direction::forward, 6);
        const uint64_t v2 = y1 == 9 ? 10 : 9;  // fresh output value
        const uint64_t x2 = env.classical_query(Direction::inverse, v2);
        uint64_t x3 = 0;
        while (x3 == 6 || x3 == x2) ++x3;  // fresh input value
        env.classical_query(Direction::forward, x3);
        return 0;
      };
      Rng rng(seed);
      const auto real = games::run_em_game(a, n, dist, true, rng);
      REQUIRE(real.classical.size() == 3);
      const uint64_t y1 = perm::em_forward(p, key, 6);
      const uint64_t v2 = y1 == 9 ? 10 : 9;
      CHECK(real.classical[0].y == y1);
      CHECK(real.classical[1].x == perm::em_inverse(p, key, v2));
      CHECK(real.classical[1].y == v2);
      CHECK(real.classical[2].y == perm::em_forward(p, key, real.classical[2].x));

      EmAdversary b;
      b.max_classical = 2;
      b.run = [](EmOracleEnv& env) {
        const uint64_t y = env.classical_query(Direction::forward, 6);
        env.classical_query(Direction::inverse, y == 9 ? 10 : 9);
        return 0;
      };
      Rng rng2(seed);
      const auto ideal = games::run_em_game(b, n, dist, false, rng2);
      const uint64_t w2 = r.forward(6) == 9 ? 10 : 9;
      CHECK(ideal.classical[0].y == r.forward(6));
      CHECK(ideal.classical[1].x == r.inverse(w2));
      CHECK(ideal.classical[1].y == w2);
    }
  }
}

TEST_CASE("hybrid chain endpoints coincide with the real and ideal games bit-for-bit") {
  const int n = 4;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    for (auto dist : {KeyDistribution::two_key_uniform, KeyDistribution::one_key}) {
      {
        std::vector<uint64_t> log_a, log_b;
        auto real_adv = strategies::tv_pair_adversary(n, &log_a);
        Rng r1(seed);
        const auto real = games::run_em_game(real_adv, n, dist, true, r1);
        auto h_adv = strategies::tv_pair_adversary(n, &log_b);
        Rng r2(seed);
        const auto h0 = games::run_hybrid(h_adv, n, dist, 0, false, r2);
        CHECK(same_transcript(real, h0));
        CHECK(log_a == log_b);
      }
      {
        std::vector<uint64_t> log_a, log_b;
        auto ideal_adv = strategies::tv_pair_adversary(n, &log_a);
        Rng r1(seed);
        const auto ideal = games::run_em_game(ideal_adv, n, dist, false, r1);
        auto h_adv = strategies::tv_pair_adversary(n, &log_b);
        Rng r2(seed);
        const auto h_top = games::run_hybrid(h_adv, n, dist, 2, false, r2);
        CHECK(same_transcript(ideal, h_top));
        CHECK(log_a == log_b);
      }
    }
  }
}

TEST_CASE("hybrid oracle schedule: stage tables follow the reprogramming cut") {
  const int n = 3;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    for (auto dist : {KeyDistribution::two_key_uniform, KeyDistribution::one_key}) {
      for (int primed = 0; primed < 2; ++primed) {
        const long j = 1;
        Rng replay(seed);
        const auto p = perm::Permutation::sample(n, replay);
        const auto r = perm::Permutation::sample(n, replay);
        const auto key = perm::sample_key(dist, n, replay);
        const long cut = primed ? j + 1 : j;

        SpyLog log;
        auto adv = make_spy(
            n, {{Direction::forward, 1}, {Direction::forward, 2}, {Direction::forward, 3}}, &log);
        Rng rng(seed);
        const auto gt = games::run_hybrid(adv, n, dist, j, primed != 0, rng);

        // Classical schedule: the first `cut` queries go to R, the rest to E.
        REQUIRE(gt.classical.size() == 3);
        for (size_t i = 0; i < 3; ++i) {
          const uint64_t x = gt.classical[i].x;
          const uint64_t expect = static_cast<long>(i) < cut
                                      ? r.forward(x)
                                      : perm::em_forward(p, key, x);
          CHECK(gt.classical[i].y == expect);
        }

        // Quantum schedule: P through stage j, the reprogrammed permutation
        // (folding the first `cut` recorded pairs) from stage j+1 on.
        perm::Transcript t;
        for (long i = 0; i < cut; ++i) t.append(gt.classical[i].x, gt.classical[i].y);
        const auto programmed = perm::perm_reprogram(p, t, key);
        REQUIRE(log.stages.size() == 4);
        for (size_t s = 0; s <= 3; ++s) {
          const auto& expect = static_cast<long>(s) <= j ? p : programmed;
          check_stage_matches(log.stages[s], expect);
          CHECK(log.inv0[s] == expect.inverse(0));
        }

        // The programmed oracle folds the pairs — the cipher built from it
        // reproduces every folded answer — except in the internal-collision
        // case (some P(x_i ^ k1) equals another entry's y_j ^ k2), where the
        // swap-chain construction is applied verbatim without that property.
        bool internal_collision = false;
        for (long i = 0; i < cut; ++i) {
          for (long l = 0; l < cut; ++l) {
            if (i != l &&
                p.forward(gt.classical[i].x ^ key.k1) == (gt.classical[l].y ^ key.k2)) {
              internal_collision = true;
            }
          }
        }
        if (!internal_collision) {
          for (long i = 0; i < cut; ++i) {
            CHECK(perm::em_forward(programmed, key, gt.classical[i].x) == gt.classical[i].y);
          }
        }
      }
    }
  }
}

TEST_CASE("hybrid and cut-experiment index ranges are validated") {
  const int n = 3;
  Rng rng(5);
  auto adv = strategies::tv_pair_adversary(n);  // classical budget 2
  CHECK_THROWS_AS(games::run_hybrid(adv, n, KeyDistribution::two_key_uniform, 3, false, rng), ConfigError);
  CHECK_THROWS_AS(games::run_hybrid(adv, n, KeyDistribution::two_key_uniform, -1, false, rng),
                  ConfigError);
  CHECK_THROWS_AS(games::run_hybrid(adv, n, KeyDistribution::two_key_uniform, 2, true, rng), ConfigError);
  CHECK_THROWS_AS(games::run_expt(adv, n, KeyDistribution::two_key_uniform, 2, false, rng), ConfigError);

  auto diag = strategies::simon_distinguisher(n);  // diagnostic cipher access
  CHECK_THROWS_AS(games::run_hybrid(diag, n, KeyDistribution::two_key_uniform, 0, false, rng),
                  ConfigError);
}

TEST_CASE("cut experiment, forward cut: replay of draws, flags, and oracle schedule") {
  const int n = 3;
  const long j = 1;
  int bad1_seen = 0, bad2_seen = 0, bad3_seen = 0, boxed_seen = 0;
  for (uint64_t seed = 0; seed < 120; ++seed) {
    for (int primed = 0; primed < 2; ++primed) {
      for (auto dist : {KeyDistribution::two_key_uniform, KeyDistribution::one_key}) {
        // Replay the runner's draw order: P, R up front; s0, s1 and the free
        // key half at the cut query.
        Rng replay(seed);
        const auto p = perm::Permutation::sample(n, replay);
        const auto r = perm::Permutation::sample(n, replay);
        const uint64_t x1 = 1;
        const uint64_t y1 = r.forward(x1);
        const uint64_t v = 2;  // the cut query
        const uint64_t s0 = replay.bits(n);
        const uint64_t s1 = replay.bits(n);
        const auto p1 = perm::compose(p, perm::make_swap(n, s0, s1));
        perm::Key key;
        key.k1 = s0 ^ v;
        key.k2 = dist == KeyDistribution::one_key ? key.k1 : replay.bits(n);
        uint64_t answer = perm::em_forward(p1, key, v);
        REQUIRE(answer == (p.forward(s1) ^ key.k2));  // the swapped image
        const bool bad1 = answer == y1;
        if (primed && bad1) {
          do {
            answer = replay.bits(n);
          } while (answer == y1);
        }
        const bool bad2 = (s1 ^ key.k1) == x1;
        const uint64_t watch = s1 ^ key.k1;

        perm::Transcript t_j;
        t_j.append(x1, y1);
        perm::Permutation q_oracle = perm::perm_reprogram(p1, t_j, key);
        const bool boxed = primed != 0 && (bad1 || bad2);
        if (boxed) {
          perm::Transcript t_j1;
          t_j1.append(x1, y1);
          t_j1.append(v, answer);
          q_oracle = perm::perm_reprogram(p, t_j1, key);
        }

        // Third query: hit the disagreement point when that is a legal fresh
        // input, otherwise a fresh input that provably avoids it.
        uint64_t x3 = watch;
        bool expect_bad3 = true;
        if (watch == x1 || watch == v) {
          expect_bad3 = false;
          x3 = 0;
          while (x3 == x1 || x3 == v || x3 == watch) ++x3;
        }
        uint64_t y3 = perm::em_forward(p1, key, x3);
        if (expect_bad3 && primed) y3 = perm::em_forward(p, key, x3);

        SpyLog log;
        auto adv = make_spy(
            n, {{Direction::forward, x1}, {Direction::forward, v}, {Direction::forward, x3}},
            &log);
        Rng rng(seed);
        const auto gt = games::run_expt(adv, n, dist, j, primed != 0, rng);

        REQUIRE(gt.classical.size() == 3);
        CHECK(gt.classical[0].x == x1);
        CHECK(gt.classical[0].y == y1);
        CHECK(gt.classical[1].x == v);
        CHECK(gt.classical[1].y == answer);
        CHECK(gt.classical[2].x == x3);
        CHECK(gt.classical[2].y == y3);
        CHECK(gt.flags.bad1 == bad1);
        CHECK(gt.flags.bad2 == bad2);
        CHECK(gt.flags.bad3 == expect_bad3);

        REQUIRE(log.stages.size() == 4);
        check_stage_matches(log.stages[0], p);
        check_stage_matches(log.stages[1], p);
        check_stage_matches(log.stages[2], q_oracle);
        check_stage_matches(log.stages[3], q_oracle);
        CHECK(log.inv0[0] == p.inverse(0));
        CHECK(log.inv0[2] == q_oracle.inverse(0));

        // With no swap there is no disagreement anywhere: the primed and
        // unprimed phase-two answers coincide.
        if (expect_bad3 && s0 != s1 && !primed) {
          CHECK(y3 != perm::em_forward(p, key, x3));
        }
        bad1_seen += bad1;
        bad2_seen += bad2;
        bad3_seen += expect_bad3;
        boxed_seen += boxed;
      }
    }
  }
  // The seed range was chosen to exercise every branch.
  CHECK(bad1_seen > 0);
  CHECK(bad2_seen > 0);
  CHECK(bad3_seen > 0);
  CHECK(boxed_seen > 0);
}

TEST_CASE("cut experiment, inverse cut: replay of draws, flags, and oracle schedule") {
  const int n = 3;
  const long j = 1;
  int bad1_seen = 0, bad2_seen = 0, bad3_seen = 0;
  for (uint64_t seed = 0; seed < 120; ++seed) {
    for (int primed = 0; primed < 2; ++primed) {
      for (auto dist : {KeyDistribution::two_key_uniform, KeyDistribution::one_key}) {
        Rng replay(seed);
        const auto p = perm::Permutation::sample(n, replay);
        const auto r = perm::Permutation::sample(n, replay);
        const uint64_t x1 = 1;
        const uint64_t y1 = r.forward(x1);
        const uint64_t v = y1 ^ 1;  // fresh output value for the inverse cut
        const uint64_t s0 = replay.bits(n);
        const uint64_t s1 = replay.bits(n);
        const auto p1 = perm::compose(p, perm::make_swap(n, s0, s1));
        perm::Key key;
        key.k2 = p.forward(s1) ^ v;  // p1(s0) = p(s1)
        key.k1 = dist == KeyDistribution::one_key ? key.k2 : replay.bits(n);
        uint64_t answer = s0 ^ key.k1;
        REQUIRE(answer == perm::em_inverse(p1, key, v));
        const bool bad1 = answer == x1;
        if (primed && bad1) {
          do {
            answer = replay.bits(n);
          } while (answer == x1);
        }
        const bool bad2 = (p.forward(s0) ^ key.k2) == y1;
        const uint64_t watch = s1 ^ key.k1;

        perm::Transcript t_j;
        t_j.append(x1, y1);
        perm::Permutation q_oracle = perm::perm_reprogram(p1, t_j, key);
        if (primed != 0 && (bad1 || bad2)) {
          perm::Transcript t_j1;
          t_j1.append(x1, y1);
          t_j1.append(answer, v);
          q_oracle = perm::perm_reprogram(p, t_j1, key);
        }

        // Third query (inverse): aim at the output whose preimage under the
        // swapped cipher is the disagreement point, else provably avoid it.
        const uint64_t hit = perm::em_forward(p1, key, watch);
        uint64_t v3 = hit;
        bool expect_bad3 = true;
        if (hit == y1 || hit == v) {
          expect_bad3 = false;
          v3 = 0;
          while (v3 == y1 || v3 == v || perm::em_inverse(p1, key, v3) == watch) ++v3;
        }
        uint64_t x3 = perm::em_inverse(p1, key, v3);
        if (expect_bad3 && primed) x3 = perm::em_inverse(p, key, v3);

        SpyLog log;
        auto adv = make_spy(
            n, {{Direction::forward, x1}, {Direction::inverse, v}, {Direction::inverse, v3}},
            &log);
        Rng rng(seed);
        const auto gt = games::run_expt(adv, n, dist, j, primed != 0, rng);

        REQUIRE(gt.classical.size() == 3);
        CHECK(gt.classical[1].x == answer);
        CHECK(gt.classical[1].y == v);
        CHECK(gt.classical[2].x == x3);
        CHECK(gt.classical[2].y == v3);
        CHECK(gt.flags.bad1 == bad1);
        CHECK(gt.flags.bad2 == bad2);
        CHECK(gt.flags.bad3 == expect_bad3);
        check_stage_matches(log.stages[1], p);
        check_stage_matches(log.stages[2], q_oracle);
        check_stage_matches(log.stages[3], q_oracle);

        bad1_seen += bad1;
        bad2_seen += bad2;
        bad3_seen += expect_bad3;
      }
    }
  }
  CHECK(bad1_seen > 0);
  CHECK(bad2_seen > 0);
  CHECK(bad3_seen > 0);
}

TEST_CASE("cut experiment at the first query: empty prefix means no bad1/bad2") {
  const int n = 3;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Rng replay(seed);
    const auto p = perm::Permutation::sample(n, replay);
    (void)perm::Permutation::sample(n, replay);  // R drawn but unused at j=0
    const uint64_t v = 5;
    const uint64_t s0 = replay.bits(n);
    const uint64_t s1 = replay.bits(n);
    const auto p1 = perm::compose(p, perm::make_swap(n, s0, s1));
    perm::Key key;
    key.k1 = s0 ^ v;
    key.k2 = replay.bits(n);
    const uint64_t watch = s1 ^ key.k1;

    uint64_t x2 = watch;
    bool expect_bad3 = true;
    if (watch == v) {
      expect_bad3 = false;
      x2 = v ^ 1;
    }

    SpyLog log;
    auto adv = make_spy(n, {{Direction::forward, v}, {Direction::forward, x2}}, &log);
    Rng rng(seed);
    const auto gt =
        games::run_expt(adv, n, KeyDistribution::two_key_uniform, 0, false, rng);

    CHECK_FALSE(gt.flags.bad1);
    CHECK_FALSE(gt.flags.bad2);
    CHECK(gt.flags.bad3 == expect_bad3);
    CHECK(gt.classical[0].y == perm::em_forward(p1, key, v));
    // An empty reprogramming prefix leaves the swapped permutation itself.
    check_stage_matches(log.stages[0], p);
    check_stage_matches(log.stages[1], p1);
    check_stage_matches(log.stages[2], p1);
  }
}

TEST_CASE("no-bad cut-experiment runs are identical primed vs unprimed") {
  const int n = 3;
  for (const long j : {0L, 1L}) {
    int nobad = 0;
    for (uint64_t seed = 0; seed < 300; ++seed) {
      std::vector<uint64_t> log_u, log_p;
      auto adv_u = strategies::tv_pair_adversary(n, &log_u);
      Rng ru(seed);
      const auto un = games::run_expt(adv_u, n, KeyDistribution::two_key_uniform, j, false, ru);
      auto adv_p = strategies::tv_pair_adversary(n, &log_p);
      Rng rp(seed);
      const auto pr = games::run_expt(adv_p, n, KeyDistribution::two_key_uniform, j, true, rp);
      if (!un.flags.any()) {
        ++nobad;
        CHECK(same_transcript(un, pr));
        CHECK(log_u == log_p);
      } else {
        // The first flagged event is decided before the runs diverge.
        if (un.flags.bad1) CHECK(pr.flags.bad1);
        if (un.flags.bad2) CHECK(pr.flags.bad2);
      }
    }
    CHECK(nobad >= 120);
  }
}

TEST_CASE("primed cut answer is uniform outside the recorded outputs") {
  const int n = 3;
  const long j = 1;
  const long trials = 28000;

  std::vector<long> rank_counts(7, 0);
  std::vector<long> value_counts(8, 0);
  for (long t = 0; t < trials; ++t) {
    EmAdversary a;
    a.max_classical = 2;
    a.run = [](EmOracleEnv& env) {
      env.classical_query(Direction::forward, 0);
      env.classical_query(Direction::forward, 1);
      return 0;
    };
    Rng rng = Rng::for_trial(4242, 0, static_cast<uint64_t>(t));
    const auto gt = games::run_expt(a, n, KeyDistribution::two_key_uniform, j, true, rng);
    const uint64_t y1 = gt.classical[0].y;
    const uint64_t y2 = gt.classical[1].y;
    REQUIRE(y2 != y1);  // the corrective resample guarantees a fresh output
    rank_counts[static_cast<size_t>(y2 > y1 ? y2 - 1 : y2)]++;

    EmAdversary b;
    b.max_classical = 2;
    b.run = [](EmOracleEnv& env) {
      env.classical_query(Direction::forward, 0);
      env.classical_query(Direction::forward, 1);
      return 0;
    };
    Rng rng_u = Rng::for_trial(4242, 1, static_cast<uint64_t>(t));
    const auto gu = games::run_expt(b, n, KeyDistribution::two_key_uniform, j, false, rng_u);
    value_counts[gu.classical[1].y]++;
  }

  // Chi-square against uniform: 7 cells (rank within the complement) for the
  // primed run, 8 cells for the unprimed run. 0.001-level critical values.
  const std::vector<double> expected7(7, static_cast<double>(trials) / 7.0);
  CHECK(games::chi_square_stat(rank_counts, expected7) < 22.46);
  const std::vector<double> expected8(8, static_cast<double>(trials) / 8.0);
  CHECK(games::chi_square_stat(value_counts, expected8) < 24.32);
}

TEST_CASE("forward-only game: schedule, function reprogramming, and rejections") {
  const int n = 3;

  SUBCASE("endpoints match the real and ideal games bit-for-bit") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
      std::vector<uint64_t> log_a, log_b;
      auto adv_a = strategies::tv_pair_adversary(n, &log_a);
      Rng r1(seed);
      const auto real = games::run_forward_only_game(adv_a, n, true, r1);
      auto adv_b = strategies::tv_pair_adversary(n, &log_b);
      Rng r2(seed);
      const auto h0 = games::run_forward_only_hybrid(adv_b, n, 0, false, r2);
      CHECK(same_transcript(real, h0));
      CHECK(log_a == log_b);

      std::vector<uint64_t> log_c, log_d;
      auto adv_c = strategies::tv_pair_adversary(n, &log_c);
      Rng r3(seed);
      const auto ideal = games::run_forward_only_game(adv_c, n, false, r3);
      auto adv_d = strategies::tv_pair_adversary(n, &log_d);
      Rng r4(seed);
      const auto h_top = games::run_forward_only_hybrid(adv_d, n, 2, false, r4);
      CHECK(same_transcript(ideal, h_top));
      CHECK(log_c == log_d);
    }
  }

  SUBCASE("stage tables follow the function-reprogramming cut") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
      for (int primed = 0; primed < 2; ++primed) {
        const long j = 1;
        Rng replay(seed);
        const auto f = perm::FunctionTable::sample(n, n, replay);
        const auto r = perm::FunctionTable::sample(n, n, replay);
        const uint64_t k = replay.bits(n);
        const long cut = primed ? j + 1 : j;

        SpyLog log;
        auto adv = make_spy(
            n, {{Direction::forward, 1}, {Direction::forward, 2}, {Direction::forward, 3}}, &log,
            /*with_inverse=*/false);
        Rng rng(seed);
        const auto gt = games::run_forward_only_hybrid(adv, n, j, primed != 0, rng);

        for (size_t i = 0; i < 3; ++i) {
          const uint64_t x = gt.classical[i].x;
          const uint64_t expect =
              static_cast<long>(i) < cut ? r(x) : perm::keyed_fn_forward(f, k, x);
          CHECK(gt.classical[i].y == expect);
        }

        perm::Transcript t;
        for (long i = 0; i < cut; ++i) t.append_any_y(gt.classical[i].x, gt.classical[i].y);
        const auto programmed = perm::fwd_only_reprogram(f, t, k);
        REQUIRE(log.stages.size() == 4);
        for (size_t s = 0; s <= 3; ++s) {
          const auto& expect = static_cast<long>(s) <= j ? f : programmed;
          for (uint64_t x = 0; x < 8; ++x) CHECK(log.stages[s][x] == expect(x));
        }
        for (long i = 0; i < cut; ++i) {
          CHECK(perm::keyed_fn_forward(programmed, k, gt.classical[i].x) == gt.classical[i].y);
        }
      }
    }
  }

  SUBCASE("inverse classical queries are rejected") {
    EmAdversary a;
    a.max_classical = 1;
    a.run = [](EmOracleEnv& env) {
      env.classical_query(Direction::inverse, 0);
      return 0;
    };
    Rng rng(7);
    CHECK_THROWS_AS(games::run_forward_only_game(a, n, true, rng), ConfigError);
  }

  SUBCASE("inverse quantum probes are rejected") {
    EmAdversary a;
    a.max_quantum = 1;
    a.run = [](EmOracleEnv& env) {
      env.quantum_probe_inverse(0);
      return 0;
    };
    Rng rng(7);
    CHECK_THROWS_AS(games::run_forward_only_game(a, n, true, rng), ConfigError);
  }
}

TEST_CASE("game runs are deterministic in the seed") {
  const int n = 5;
  for (uint64_t seed : {3u, 17u, 91u}) {
    auto adv_a = strategies::difference_matcher(2, 4);
    Rng r1(seed);
    const auto a = games::run_em_game(adv_a, n, KeyDistribution::one_key, true, r1);
    auto adv_b = strategies::difference_matcher(2, 4);
    Rng r2(seed);
    const auto b = games::run_em_game(adv_b, n, KeyDistribution::one_key, true, r2);
    CHECK(same_transcript(a, b));
  }
}
