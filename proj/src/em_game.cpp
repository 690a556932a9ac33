#include "qemlab/games/em_game.hpp"

#include <optional>
#include <vector>

#include "qemlab/common.hpp"
#include "qemlab/reprogram.hpp"

namespace qemlab::games {

namespace {

using perm::FunctionTable;
using perm::Key;
using perm::KeyDistribution;
using perm::Permutation;
using perm::Transcript;

// Strict transcript (distinct x and y) from the first `count` recorded pairs.
Transcript strict_prefix(const GameTranscript& gt, size_t count) {
  Transcript t;
  for (size_t i = 0; i < count; ++i) t.append(gt.classical[i].x, gt.classical[i].y);
  return t;
}

// Function-oracle transcript (distinct x only) from the first `count` pairs.
Transcript loose_prefix(const GameTranscript& gt, size_t count) {
  Transcript t;
  for (size_t i = 0; i < count; ++i) t.append_any_y(gt.classical[i].x, gt.classical[i].y);
  return t;
}

bool prefix_contains_x(const GameTranscript& gt, size_t count, uint64_t x) {
  for (size_t i = 0; i < count; ++i) {
    if (gt.classical[i].x == x) return true;
  }
  return false;
}

bool prefix_contains_y(const GameTranscript& gt, size_t count, uint64_t y) {
  for (size_t i = 0; i < count; ++i) {
    if (gt.classical[i].y == y) return true;
  }
  return false;
}

GameTranscript finish(EmOracleEnv& env, const EmAdversary& adv) {
  const int guess = adv.run(env);
  env.transcript().guess = guess;
  return std::move(env.transcript());
}

}  // namespace

GameTranscript run_em_game(const EmAdversary& adv, int n, KeyDistribution dist, bool real_world,
                           Rng& rng) {
  require(adv.run != nullptr, "game: adversary has no run function");
  // All two-sided games draw (P, R, key) in the same order, used or not, so
  // equal-distribution games coincide bit-for-bit under a shared seed.
  const Permutation p = Permutation::sample(n, rng);
  const Permutation r = Permutation::sample(n, rng);
  const Key key = perm::sample_key(dist, n, rng);

  EmOracleEnv env(n, adv.max_classical, adv.max_quantum, rng);
  env.set_quantum_tables(p.table(), p.inverse_table());
  env.set_hooks({.classical =
                     [&, real_world](Direction d, uint64_t v) {
                       if (real_world) {
                         return d == Direction::forward ? perm::em_forward(p, key, v)
                                                        : perm::em_inverse(p, key, v);
                       }
                       return d == Direction::forward ? r.forward(v) : r.inverse(v);
                     },
                 .after_classical = nullptr});

  std::vector<uint32_t> cipher_table;
  if (adv.cipher_quantum_access) {
    cipher_table.resize(static_cast<size_t>(1) << n);
    for (uint64_t x = 0; x < cipher_table.size(); ++x) {
      cipher_table[x] = static_cast<uint32_t>(real_world ? perm::em_forward(p, key, x)
                                                         : r.forward(x));
    }
    env.set_cipher_quantum_tables(cipher_table);
  }
  return finish(env, adv);
}

GameTranscript run_hybrid(const EmAdversary& adv, int n, KeyDistribution dist, long j, bool primed,
                          Rng& rng) {
  require(adv.run != nullptr, "game: adversary has no run function");
  require(j >= 0 && j <= adv.max_classical, "hybrid index out of range");
  require(!primed || j < adv.max_classical, "bridge hybrid index must stay below the budget");
  require(!adv.cipher_quantum_access,
          "diagnostic cipher access is only available in the real/ideal game");
  const Permutation p = Permutation::sample(n, rng);
  const Permutation r = Permutation::sample(n, rng);
  const Key key = perm::sample_key(dist, n, rng);
  // Number of leading classical queries answered by R; also the number of
  // recorded pairs folded into the quantum oracle at the switch.
  const long cut = primed ? j + 1 : j;

  EmOracleEnv env(n, adv.max_classical, adv.max_quantum, rng);
  env.set_quantum_tables(p.table(), p.inverse_table());
  std::optional<Permutation> programmed;
  env.set_hooks(
      {.classical =
           [&](Direction d, uint64_t v) {
             const long idx = env.classical_used();  // queries answered so far
             if (idx < cut) return d == Direction::forward ? r.forward(v) : r.inverse(v);
             return d == Direction::forward ? perm::em_forward(p, key, v)
                                            : perm::em_inverse(p, key, v);
           },
       .after_classical =
           [&] {
             if (env.classical_used() == j + 1) {
               const Transcript t = strict_prefix(env.transcript(), static_cast<size_t>(cut));
               programmed = perm::perm_reprogram(p, t, key);
               env.set_quantum_tables(programmed->table(), programmed->inverse_table());
             }
           }});
  return finish(env, adv);
}

GameTranscript run_expt(const EmAdversary& adv, int n, KeyDistribution dist, long j, bool primed,
                        Rng& rng) {
  require(adv.run != nullptr, "game: adversary has no run function");
  require(j >= 0 && j < adv.max_classical, "cut experiment index out of range");
  require(!adv.cipher_quantum_access,
          "diagnostic cipher access is only available in the real/ideal game");
  const Permutation p = Permutation::sample(n, rng);
  const Permutation r = Permutation::sample(n, rng);

  struct CutState {
    std::optional<Permutation> p1;        // P with the swapped preimage pair
    std::optional<Permutation> q_oracle;  // quantum oracle after the cut
    Key key{};
    uint64_t watch = 0;  // the one phase-two input where the ciphers disagree
  };
  CutState st;

  EmOracleEnv env(n, adv.max_classical, adv.max_quantum, rng);
  env.set_quantum_tables(p.table(), p.inverse_table());
  env.set_hooks(
      {.classical =
           [&, n, dist, primed, j](Direction d, uint64_t v) -> uint64_t {
             const long idx = env.classical_used();
             GameTranscript& gt = env.transcript();
             if (idx < j) {
               // Phase one: queries 1..j go to the independent permutation.
               return d == Direction::forward ? r.forward(v) : r.inverse(v);
             }
             if (idx == j) {
               // The cut: derive the key from this query so the answer is a
               // cipher answer under P1 = P o swap(s0, s1).
               const uint64_t s0 = env.rng().bits(n);
               const uint64_t s1 = env.rng().bits(n);
               st.p1 = perm::compose(p, perm::make_swap(n, s0, s1));
               uint64_t answer = 0;
               if (d == Direction::forward) {
                 st.key.k1 = s0 ^ v;
                 st.key.k2 =
                     dist == KeyDistribution::one_key ? st.key.k1 : env.rng().bits(n);
                 answer = perm::em_forward(*st.p1, st.key, v);  // = P(s1) ^ k2
                 const Transcript t_j = strict_prefix(gt, static_cast<size_t>(j));
                 st.q_oracle = perm::perm_reprogram(*st.p1, t_j, st.key);
                 if (prefix_contains_y(gt, static_cast<size_t>(j), answer)) {
                   gt.flags.bad1 = true;
                   if (primed) {
                     do {
                       answer = env.rng().bits(n);
                     } while (prefix_contains_y(gt, static_cast<size_t>(j), answer));
                   }
                 }
                 if (prefix_contains_x(gt, static_cast<size_t>(j), s1 ^ st.key.k1)) {
                   gt.flags.bad2 = true;
                 }
                 if (primed && (gt.flags.bad1 || gt.flags.bad2)) {
                   Transcript t_j1 = strict_prefix(gt, static_cast<size_t>(j));
                   t_j1.append(v, answer);
                   st.q_oracle = perm::perm_reprogram(p, t_j1, st.key);
                 }
               } else {
                 st.key.k2 = st.p1->forward(s0) ^ v;  // P1(s0) = P(s1)
                 st.key.k1 =
                     dist == KeyDistribution::one_key ? st.key.k2 : env.rng().bits(n);
                 answer = perm::em_inverse(*st.p1, st.key, v);  // = s0 ^ k1
                 const Transcript t_j = strict_prefix(gt, static_cast<size_t>(j));
                 st.q_oracle = perm::perm_reprogram(*st.p1, t_j, st.key);
                 if (prefix_contains_x(gt, static_cast<size_t>(j), answer)) {
                   gt.flags.bad1 = true;
                   if (primed) {
                     do {
                       answer = env.rng().bits(n);
                     } while (prefix_contains_x(gt, static_cast<size_t>(j), answer));
                   }
                 }
                 if (prefix_contains_y(gt, static_cast<size_t>(j), p.forward(s0) ^ st.key.k2)) {
                   gt.flags.bad2 = true;
                 }
                 if (primed && (gt.flags.bad1 || gt.flags.bad2)) {
                   Transcript t_j1 = strict_prefix(gt, static_cast<size_t>(j));
                   t_j1.append(answer, v);
                   st.q_oracle = perm::perm_reprogram(p, t_j1, st.key);
                 }
               }
               st.watch = s1 ^ st.key.k1;
               env.set_quantum_tables(st.q_oracle->table(), st.q_oracle->inverse_table());
               return answer;
             }
             // Phase two: the cipher under P1, except that hitting the one
             // input where P1 and P ciphers disagree flags bad3 (and the
             // primed run answers from the plain-P cipher there).
             if (d == Direction::forward) {
               uint64_t y = perm::em_forward(*st.p1, st.key, v);
               if (v == st.watch) {
                 gt.flags.bad3 = true;
                 if (primed) y = perm::em_forward(p, st.key, v);
               }
               return y;
             }
             uint64_t x = perm::em_inverse(*st.p1, st.key, v);
             if (x == st.watch) {
               gt.flags.bad3 = true;
               if (primed) x = perm::em_inverse(p, st.key, v);
             }
             return x;
           },
       .after_classical = nullptr});
  return finish(env, adv);
}

GameTranscript run_forward_only_game(const EmAdversary& adv, int n, bool real_world, Rng& rng) {
  require(adv.run != nullptr, "game: adversary has no run function");
  require(!adv.cipher_quantum_access,
          "diagnostic cipher access is only available in the real/ideal game");
  const FunctionTable f = FunctionTable::sample(n, n, rng);
  const FunctionTable r = FunctionTable::sample(n, n, rng);
  const uint64_t k = rng.bits(n);

  EmOracleEnv env(n, adv.max_classical, adv.max_quantum, rng);
  env.set_quantum_tables(f.table(), {});
  env.set_hooks({.classical =
                     [&, real_world, k](Direction d, uint64_t v) {
                       require(d == Direction::forward,
                               "forward-only game: inverse classical queries not available");
                       return real_world ? perm::keyed_fn_forward(f, k, v) : r(v);
                     },
                 .after_classical = nullptr});
  return finish(env, adv);
}

GameTranscript run_forward_only_hybrid(const EmAdversary& adv, int n, long j, bool primed,
                                       Rng& rng) {
  require(adv.run != nullptr, "game: adversary has no run function");
  require(j >= 0 && j <= adv.max_classical, "hybrid index out of range");
  require(!primed || j < adv.max_classical, "bridge hybrid index must stay below the budget");
  require(!adv.cipher_quantum_access,
          "diagnostic cipher access is only available in the real/ideal game");
  const FunctionTable f = FunctionTable::sample(n, n, rng);
  const FunctionTable r = FunctionTable::sample(n, n, rng);
  const uint64_t k = rng.bits(n);
  const long cut = primed ? j + 1 : j;

  EmOracleEnv env(n, adv.max_classical, adv.max_quantum, rng);
  env.set_quantum_tables(f.table(), {});
  std::optional<FunctionTable> programmed;
  env.set_hooks(
      {.classical =
           [&, k](Direction d, uint64_t v) {
             require(d == Direction::forward,
                     "forward-only game: inverse classical queries not available");
             const long idx = env.classical_used();
             if (idx < cut) return r(v);
             return perm::keyed_fn_forward(f, k, v);
           },
       .after_classical =
           [&, k] {
             if (env.classical_used() == j + 1) {
               const Transcript t = loose_prefix(env.transcript(), static_cast<size_t>(cut));
               programmed = perm::fwd_only_reprogram(f, t, k);
               env.set_quantum_tables(programmed->table(), {});
             }
           }});
  return finish(env, adv);
}

}  // namespace qemlab::games
