#include "qemlab/games/strategies.hpp"

#include <bit>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "attack_common.hpp"
#include "qemlab/attacks/claw.hpp"
#include "qemlab/attacks/grover.hpp"
#include "qemlab/common.hpp"
#include "qemlab/gf2.hpp"
#include "qemlab/statevector.hpp"

namespace qemlab::games::strategies {

namespace {
constexpr uint64_t kDelta = 1;  // fixed pair offset for difference tables
}

EmAdversary coin_guesser() {
  EmAdversary a;
  a.max_classical = 0;
  a.max_quantum = 0;
  a.run = [](EmOracleEnv& env) { return env.rng().coin() ? 1 : 0; };
  return a;
}

EmAdversary low_bit_prober() {
  EmAdversary a;
  a.max_classical = 1;
  a.max_quantum = 0;
  a.run = [](EmOracleEnv& env) {
    return static_cast<int>(env.classical_query(Direction::forward, 0) & 1);
  };
  return a;
}

EmAdversary difference_matcher(int q_e, int q_p) {
  require(q_e >= 0 && q_p >= 0, "difference matcher: negative budget");
  EmAdversary a;
  a.max_classical = q_e;
  a.max_quantum = q_p;
  a.run = [q_e, q_p](EmOracleEnv& env) {
    const uint64_t dim = uint64_t{1} << env.n();
    require(static_cast<uint64_t>(q_e) <= dim && static_cast<uint64_t>(q_p) <= dim,
            "difference matcher: budget exceeds domain");
    std::vector<uint64_t> ys(static_cast<size_t>(q_e));
    for (int i = 0; i < q_e; ++i) {
      ys[static_cast<size_t>(i)] =
          env.classical_query(Direction::forward, static_cast<uint64_t>(i));
    }
    std::vector<uint64_t> vs(static_cast<size_t>(q_p));
    for (int u = 0; u < q_p; ++u) {
      vs[static_cast<size_t>(u)] = env.quantum_probe(static_cast<uint64_t>(u));
    }
    for (int i = 0; i < q_e; ++i) {
      for (int j = i + 1; j < q_e; ++j) {
        const uint64_t diff = static_cast<uint64_t>(i) ^ static_cast<uint64_t>(j);
        for (int u = 0; u < q_p; ++u) {
          const uint64_t w = static_cast<uint64_t>(u) ^ diff;
          if (w < static_cast<uint64_t>(q_p) &&
              (vs[static_cast<size_t>(u)] ^ vs[static_cast<size_t>(w)]) ==
                  (ys[static_cast<size_t>(i)] ^ ys[static_cast<size_t>(j)])) {
            return 1;
          }
        }
      }
    }
    return 0;
  };
  return a;
}

EmAdversary simon_distinguisher(int n, long max_iterations) {
  require(n >= 2 && n <= 12, "hidden-shift distinguisher: n must be in [2, 12]");
  if (max_iterations <= 0) max_iterations = 3 * n;
  EmAdversary a;
  a.max_classical = 3;
  a.max_quantum = 2 * max_iterations + 6;  // circuit pairs + two candidate checks
  a.cipher_quantum_access = true;
  a.run = [n, max_iterations](EmOracleEnv& env) {
    const uint64_t e0 = env.classical_query(Direction::forward, 0);
    const uint64_t e1 = env.classical_query(Direction::forward, 1);
    const uint64_t e2 = env.classical_query(Direction::forward, 2);
    attacks::Gf2Solver solver(n);
    for (long it = 0; it < max_iterations && solver.rank() < n - 1; ++it) {
      sim::RegisterLayout layout({{"X", n}, {"Y", n}});
      auto st = sim::init_basis_state(layout, {});
      sim::apply_hadamard(st, "X");
      env.apply_cipher_xor(st, "X", "Y");
      env.apply_public_xor(st, "X", "Y", Direction::forward);
      sim::apply_hadamard(st, "X");
      solver.add_row(sim::measure_register(st, "X", env.rng()));
    }
    std::vector<uint64_t> candidates;
    if (solver.rank() == n - 1) {
      const auto basis = solver.nullspace_basis();
      if (basis.size() == 1) candidates.push_back(basis[0]);
    }
    candidates.push_back(0);  // the degenerate-shift fallback
    for (uint64_t k1 : candidates) {
      const uint64_t k2 = e0 ^ env.quantum_probe(k1);
      if ((env.quantum_probe(1 ^ k1) ^ k2) == e1 && (env.quantum_probe(2 ^ k1) ^ k2) == e2) {
        return 1;
      }
    }
    return 0;
  };
  return a;
}

EmAdversary claw_distinguisher(int n, uint64_t table_size, int forced_iterations) {
  require(n >= 2 && n <= 18, "claw distinguisher: n must be in [2, 18]");
  const uint64_t dim = uint64_t{1} << n;
  require(table_size >= 1 && 2 * table_size + 2 <= dim,
          "claw distinguisher: table leaves no verification points");
  const uint64_t hint = attacks::claw_marked_hint(n, table_size);
  const int k =
      forced_iterations >= 0 ? forced_iterations : attacks::grover_iteration_count(n, hint);
  EmAdversary a;
  a.max_classical = static_cast<long>(2 * table_size + 2);
  a.max_quantum = 2 * k + 2 + static_cast<long>(2 * (table_size + 1));
  a.run = [n, table_size, k](EmOracleEnv& env) {
    std::vector<char> used(uint64_t{1} << n, 0);
    const auto xs =
        attacks::detail::sample_pair_representatives(n, kDelta, table_size, &used, env.rng());
    std::vector<uint64_t> ex(xs.size());
    std::unordered_multimap<uint64_t, size_t> targets;
    for (size_t i = 0; i < xs.size(); ++i) {
      ex[i] = env.classical_query(Direction::forward, xs[i]);
      const uint64_t partner = env.classical_query(Direction::forward, xs[i] ^ kDelta);
      targets.emplace(ex[i] ^ partner, i);
    }
    const auto [h1, h2] = attacks::detail::pick_holdouts(n, used, env.rng());
    const uint64_t eh1 = env.classical_query(Direction::forward, h1);
    const uint64_t eh2 = env.classical_query(Direction::forward, h2);

    sim::RegisterLayout layout({{"X", n}});
    auto st = sim::init_basis_state(layout, {{"X", 0}});
    sim::apply_hadamard(st, "X");
    for (int it = 0; it < k; ++it) {
      env.apply_public_phase(
          st, "X",
          [&targets](uint64_t u, std::span<const uint32_t> tbl) {
            return targets.find(tbl[u] ^ tbl[u ^ kDelta]) != targets.end();
          },
          2);
      attacks::apply_uniform_reflection(st, "X");
    }
    const uint64_t u = sim::measure_register(st, "X", env.rng());

    const uint64_t pu = env.quantum_probe(u);
    const uint64_t gu = pu ^ env.quantum_probe(u ^ kDelta);
    for (auto [it, end] = targets.equal_range(gu); it != end; ++it) {
      if (env.quantum_used() + 2 > env.quantum_budget()) break;
      const uint64_t k1 = u ^ xs[it->second];
      const uint64_t k2 = ex[it->second] ^ pu;
      if ((env.quantum_probe(h1 ^ k1) ^ k2) == eh1 && (env.quantum_probe(h2 ^ k1) ^ k2) == eh2) {
        return 1;
      }
    }
    return 0;
  };
  return a;
}

EmAdversary birthday_distinguisher(int n, uint64_t d_size, uint64_t t_size) {
  require(n >= 2 && n <= 24, "birthday distinguisher: n must be in [2, 24]");
  const uint64_t dim = uint64_t{1} << n;
  require(d_size >= 1 && 2 * d_size + 2 <= dim,
          "birthday distinguisher: table leaves no verification points");
  EmAdversary a;
  a.max_classical = static_cast<long>(2 * d_size + 2);
  a.max_quantum = static_cast<long>(2 * t_size + 40);
  a.run = [n, d_size, t_size](EmOracleEnv& env) {
    std::vector<char> used(uint64_t{1} << n, 0);
    const auto xs =
        attacks::detail::sample_pair_representatives(n, kDelta, d_size, &used, env.rng());
    std::vector<uint64_t> ex(xs.size());
    std::unordered_multimap<uint64_t, size_t> targets;
    for (size_t i = 0; i < xs.size(); ++i) {
      ex[i] = env.classical_query(Direction::forward, xs[i]);
      const uint64_t partner = env.classical_query(Direction::forward, xs[i] ^ kDelta);
      targets.emplace(ex[i] ^ partner, i);
    }
    const auto [h1, h2] = attacks::detail::pick_holdouts(n, used, env.rng());
    const uint64_t eh1 = env.classical_query(Direction::forward, h1);
    const uint64_t eh2 = env.classical_query(Direction::forward, h2);

    for (uint64_t probe = 0; probe < t_size; ++probe) {
      if (env.quantum_used() + 2 > env.quantum_budget()) break;
      const uint64_t u = env.rng().bits(n);
      const uint64_t pu = env.quantum_probe(u);
      const uint64_t gu = pu ^ env.quantum_probe(u ^ kDelta);
      for (auto [it, end] = targets.equal_range(gu); it != end; ++it) {
        if (env.quantum_used() + 2 > env.quantum_budget()) break;
        const uint64_t k1 = u ^ xs[it->second];
        const uint64_t k2 = ex[it->second] ^ pu;
        if ((env.quantum_probe(h1 ^ k1) ^ k2) == eh1 &&
            (env.quantum_probe(h2 ^ k1) ^ k2) == eh2) {
          return 1;
        }
      }
    }
    return 0;
  };
  return a;
}

EmAdversary stage_detector(int n, long j, long probes) {
  require(j >= 0 && probes >= 0, "stage detector: negative parameters");
  require(j + 1 <= (int64_t{1} << n), "stage detector: too many classical queries");
  EmAdversary a;
  a.max_classical = j + 1;
  a.max_quantum = probes;
  a.run = [n, j, probes](EmOracleEnv& env) {
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    pairs.reserve(static_cast<size_t>(j) + 1);
    for (long i = 0; i <= j; ++i) {
      pairs.emplace_back(static_cast<uint64_t>(i),
                         env.classical_query(Direction::forward, static_cast<uint64_t>(i)));
    }
    for (long s = 0; s < probes; ++s) {
      const uint64_t u = env.rng().bits(n);
      const uint64_t v = env.quantum_probe(u);
      for (const auto& [x, y] : pairs) {
        if ((u ^ x) == (v ^ y)) return 1;  // single-key-consistent point
      }
    }
    return 0;
  };
  return a;
}

EmAdversary tv_pair_adversary(int n, std::vector<uint64_t>* probe_log) {
  require(n >= 2, "pair adversary: n must be at least 2");
  EmAdversary a;
  a.max_classical = 2;
  a.max_quantum = 3;
  a.run = [probe_log](EmOracleEnv& env) {
    const uint64_t p0 = env.quantum_probe(0);
    const uint64_t y1 = env.classical_query(Direction::forward, 0);
    const uint64_t p1 = env.quantum_probe(1);
    const uint64_t y2 = env.classical_query(Direction::forward, 1);
    const uint64_t p2 = env.quantum_probe(2);
    if (probe_log) {
      probe_log->push_back(p0);
      probe_log->push_back(p1);
      probe_log->push_back(p2);
    }
    return static_cast<int>(std::popcount(y1 ^ (y2 << 1)) & 1);
  };
  return a;
}

std::vector<NamedDistinguisher> shipped_distinguishers(int n) {
  require(n >= 4 && n <= 12, "distinguisher roster: n must be in [4, 12]");
  std::vector<NamedDistinguisher> list;
  list.push_back({"coin", 0, 0, 0, [] { return coin_guesser(); }});
  list.push_back({"low-bit", 1, 0, 0, [] { return low_bit_prober(); }});
  list.push_back({"diff-1x1", 1, 1, 0, [] { return difference_matcher(1, 1); }});
  list.push_back({"diff-2x2", 2, 2, 0, [] { return difference_matcher(2, 2); }});
  list.push_back({"diff-2x8", 2, 8, 0, [] { return difference_matcher(2, 8); }});
  list.push_back({"diff-4x16", 4, 16, 0, [] { return difference_matcher(4, 16); }});

  const long simon_iters = 3 * n;
  const long simon_trials = n <= 8 ? 60 : (n <= 10 ? 8 : 4);
  list.push_back({"simon-q2", 3, static_cast<double>(2 * simon_iters + 6), simon_trials,
                  [n] { return simon_distinguisher(n); }});

  // Charged query counts are the adversaries' enforced budgets, so a bound
  // computed from a row's (q_e, q_p) always covers the run that produced it.
  const uint64_t claw_table = n <= 8 ? 4 : (n <= 10 ? 8 : 16);
  {
    const auto proto = claw_distinguisher(n, claw_table);
    list.push_back({"q1-claw", static_cast<double>(proto.max_classical),
                    static_cast<double>(proto.max_quantum), 200,
                    [n, claw_table] { return claw_distinguisher(n, claw_table); }});
  }

  const uint64_t half = uint64_t{1} << (n / 2);  // d*t = 2^n when n is even
  {
    const auto proto = birthday_distinguisher(n, half, half);
    list.push_back({"birthday", static_cast<double>(proto.max_classical),
                    static_cast<double>(proto.max_quantum), 400,
                    [n, half] { return birthday_distinguisher(n, half, half); }});
  }
  return list;
}

std::vector<NamedDistinguisher> shipped_forward_only_distinguishers(int n) {
  require(n >= 4 && n <= 12, "distinguisher roster: n must be in [4, 12]");
  std::vector<NamedDistinguisher> list;
  list.push_back({"coin", 0, 0, 0, [] { return coin_guesser(); }});
  list.push_back({"low-bit", 1, 0, 0, [] { return low_bit_prober(); }});
  list.push_back({"diff-1x1", 1, 1, 0, [] { return difference_matcher(1, 1); }});
  list.push_back({"diff-2x2", 2, 2, 0, [] { return difference_matcher(2, 2); }});
  list.push_back({"diff-2x8", 2, 8, 0, [] { return difference_matcher(2, 8); }});
  list.push_back({"diff-4x16", 4, 16, 0, [] { return difference_matcher(4, 16); }});
  return list;
}

PermResampleAdversary canonical_perm_resampler(int n, long q) {
  require(n >= 1 && q >= 0, "canonical resampler: bad parameters");
  auto memory = std::make_shared<std::unordered_map<uint64_t, uint64_t>>();
  PermResampleAdversary adv;
  adv.q = q;
  adv.phase1 = [n, q, memory](QuantumOracleEnv& env) {
    for (long i = 0; i < q; ++i) {
      const uint64_t x = env.rng().bits(n);
      (*memory)[x] = env.probe(x);
    }
  };
  adv.phase2 = [memory](QuantumOracleEnv& env, uint64_t s0, uint64_t s1) {
    for (uint64_t s : {s0, s1}) {
      const auto it = memory->find(s);
      if (it != memory->end() && env.probe(s) != it->second) return 1;
    }
    return 0;
  };
  return adv;
}

FnResampleAdversary fn_fixed_point_prober(int m, long q) {
  require(m >= 1 && q >= 0 && q <= (int64_t{1} << m), "fixed-point prober: bad parameters");
  auto memory = std::make_shared<std::vector<uint64_t>>();
  FnResampleAdversary adv;
  adv.q = q;
  adv.phase1 = [q, memory](QuantumOracleEnv& env) {
    memory->reserve(static_cast<size_t>(q));
    for (long i = 0; i < q; ++i) memory->push_back(env.probe(static_cast<uint64_t>(i)));
  };
  adv.phase2 = [memory](QuantumOracleEnv& env, uint64_t s) {
    if (s < memory->size() && env.probe(s) != (*memory)[s]) return 1;
    return 0;
  };
  return adv;
}

namespace {

// Shared pieces of the reprogramming strategies: a sampled base function and
// the one-uniform-point sampler with its exactly enumerable support.
void wire_uniform_point_sampler(ReprogramAdversary& adv, int m, int n) {
  adv.m = m;
  adv.n = n;
  adv.epsilon = std::ldexp(1.0, -m);
  adv.choose_f = [m, n](Rng& rng) { return perm::FunctionTable::sample(m, n, rng); };
  adv.sample_b = [m, n](Rng& rng) {
    perm::ReprogramSet b;
    b.insert(rng.bits(m), rng.bits(n));
    return b;
  };
  adv.enumerate_b_inputs = [m] {
    std::vector<std::vector<uint64_t>> support;
    support.reserve(static_cast<size_t>(1) << m);
    for (uint64_t s = 0; s < (uint64_t{1} << m); ++s) support.push_back({s});
    return support;
  };
}

}  // namespace

ReprogramAdversary reprogram_fixed_point(int m, int n) {
  require(m >= 1 && m <= 12 && n >= 1, "fixed-point reprogram strategy: bad dimensions");
  ReprogramAdversary adv;
  wire_uniform_point_sampler(adv, m, n);
  adv.phase2_budget = 1;
  adv.run_phases = [](QuantumOracleEnv& env, const perm::FunctionTable& f,
                      const std::function<const perm::ReprogramSet&()>& reveal) {
    const uint64_t v = env.probe(0);
    const perm::ReprogramSet& b = reveal();
    bool covers = false;
    for (const auto& [input, output] : b.pairs()) covers = covers || input == 0;
    return covers && v != f(0) ? 1 : 0;
  };
  return adv;
}

ReprogramAdversary reprogram_geometric(int m, int n) {
  require(m >= 1 && m <= 12 && n >= 1, "geometric reprogram strategy: bad dimensions");
  ReprogramAdversary adv;
  wire_uniform_point_sampler(adv, m, n);
  adv.phase2_budget = int64_t{1} << m;  // the geometric walk stops long before this
  adv.run_phases = [](QuantumOracleEnv& env, const perm::FunctionTable& f,
                      const std::function<const perm::ReprogramSet&()>& reveal) {
    int found = 0;
    for (uint64_t x = 0; x < f.domain_size() && env.phase_used() < env.phase_budget(); ++x) {
      if (env.probe(x) != f(x)) {
        found = 1;
        break;
      }
      if (!env.rng().coin()) break;
    }
    (void)reveal();
    return found;
  };
  return adv;
}

ReprogramAdversary reprogram_empty(int m, int n) {
  require(m >= 1 && m <= 12 && n >= 1, "empty reprogram strategy: bad dimensions");
  ReprogramAdversary adv;
  adv.m = m;
  adv.n = n;
  adv.epsilon = 0.0;
  adv.phase2_budget = 1;
  adv.choose_f = [m, n](Rng& rng) { return perm::FunctionTable::sample(m, n, rng); };
  adv.sample_b = [](Rng&) { return perm::ReprogramSet{}; };
  adv.enumerate_b_inputs = [] { return std::vector<std::vector<uint64_t>>{{}}; };
  adv.run_phases = [](QuantumOracleEnv& env, const perm::FunctionTable& f,
                      const std::function<const perm::ReprogramSet&()>& reveal) {
    const uint64_t v = env.probe(0);
    (void)reveal();
    return v != f(0) ? 1 : 0;
  };
  return adv;
}

}  // namespace qemlab::games::strategies
