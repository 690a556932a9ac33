#include "qemlab/games/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <utility>

#include "qemlab/attacks/birthday.hpp"
#include "qemlab/attacks/claw.hpp"
#include "qemlab/attacks/simon.hpp"
#include "qemlab/cipher.hpp"
#include "qemlab/common.hpp"
#include "qemlab/games/bounds.hpp"
#include "qemlab/games/em_game.hpp"
#include "qemlab/games/estimate.hpp"
#include "qemlab/games/stats.hpp"
#include "qemlab/games/strategies.hpp"
#include "qemlab/permutation.hpp"
#include "qemlab/rng.hpp"

namespace qemlab::games {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

double binomial_ci(double p, long trials) {
  const double hw = 1.96 * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(trials));
  return std::max(hw, 1.0 / static_cast<double>(trials));
}

void check_opts(const RunOpts& opt) {
  require(opt.n >= 1, "n must be at least 1");
  if (opt.n > max_qubits()) throw ConfigError("n exceeds simulator cap");
  require(opt.trials >= 1, "trials must be at least 1");
}

perm::KeyDistribution parse_two_sided_variant(const std::string& variant,
                                              const std::string& context) {
  if (variant == "two-key") return perm::KeyDistribution::two_key_uniform;
  if (variant == "one-key") return perm::KeyDistribution::one_key;
  throw ConfigError(context + " runs against the two-sided construction; variant must be "
                              "two-key or one-key");
}

// ---- attacks ------------------------------------------------------------------

struct AttackTally {
  long hits = 0;
  double sum_classical = 0;
  double sum_quantum = 0;
};

AttackTally run_attack_trials(long trials, int threads, uint64_t seed, uint64_t stream,
                              const std::function<attacks::AttackResult(Rng&)>& one_trial) {
  std::vector<char> success(static_cast<size_t>(trials), 0);
  std::vector<long> classical(static_cast<size_t>(trials), 0);
  std::vector<long> quantum(static_cast<size_t>(trials), 0);
  run_trials(trials, threads, [&](long t) {
    Rng rng = Rng::for_trial(seed, stream, static_cast<uint64_t>(t));
    const auto res = one_trial(rng);
    success[static_cast<size_t>(t)] = res.success ? 1 : 0;
    classical[static_cast<size_t>(t)] = res.classical_queries;
    quantum[static_cast<size_t>(t)] = res.quantum_queries;
  });
  AttackTally tally;
  for (long t = 0; t < trials; ++t) {
    tally.hits += success[static_cast<size_t>(t)];
    tally.sum_classical += static_cast<double>(classical[static_cast<size_t>(t)]);
    tally.sum_quantum += static_cast<double>(quantum[static_cast<size_t>(t)]);
  }
  return tally;
}

ResultRow attack_row(const std::string& name, const RunOpts& opt, double q_e, double q_p,
                     const AttackTally& tally, long wall_ms) {
  ResultRow row;
  row.experiment = "attack";
  row.name = name;
  row.n = opt.n;
  row.variant = opt.variant;
  row.q_e = q_e;
  row.q_p = q_p;
  row.trials = opt.trials;
  row.p_world1 = static_cast<double>(tally.hits) / static_cast<double>(opt.trials);
  row.p_world0 = 0.0;
  row.advantage = row.p_world1;
  row.ci_halfwidth = binomial_ci(row.p_world1, opt.trials);
  BoundParams bp;
  bp.n = opt.n;
  bp.q_e = q_e;
  bp.q_p = q_p;
  const auto b = compute_bound("em", bp);
  row.bound = b.value;
  row.vacuous = b.vacuous;
  row.seed = opt.seed;
  row.wall_time_ms = wall_ms;
  return row;
}

}  // namespace

std::vector<ResultRow> drive_attack(const std::string& name, const RunOpts& opt,
                                    std::vector<long> qe_list, std::vector<long> qp_list) {
  check_opts(opt);
  require(name == "simon-q2" || name == "q1-claw" || name == "birthday",
          "attack name must be simon-q2, q1-claw, or birthday");
  const auto dist = parse_two_sided_variant(opt.variant, "attack");
  std::vector<ResultRow> rows;
  uint64_t stream = 0;

  if (name == "simon-q2") {
    if (!qe_list.empty() || !qp_list.empty()) {
      throw ConfigError("simon-q2 fixes its own query schedule; --q-e/--q-p do not apply");
    }
    const auto start = Clock::now();
    const auto tally = run_attack_trials(opt.trials, opt.threads, opt.seed, stream, [&](Rng& rng) {
      const auto p = perm::Permutation::sample(opt.n, rng);
      const auto key = perm::sample_key(dist, opt.n, rng);
      return attacks::simon_q2_attack(opt.n, p, key, rng, 0);
    });
    // Each verification probe costs one cipher and one public query; each
    // period-finding iteration costs one quantum query to each oracle.
    const double per_side =
        (tally.sum_classical / 2.0 + tally.sum_quantum / 2.0) / static_cast<double>(opt.trials);
    rows.push_back(attack_row(name, opt, per_side, per_side, tally, ms_since(start)));
  } else if (name == "q1-claw") {
    if (!qp_list.empty()) {
      throw ConfigError(
          "q1-claw derives its public-oracle count from the amplification schedule; "
          "--q-p does not apply");
    }
    if (qe_list.empty()) {
      const auto auto_ts =
          static_cast<long>(std::llround(std::pow(2.0, static_cast<double>(opt.n) / 3.0)));
      qe_list.push_back(2 * std::max<long>(auto_ts, 1) + 2);
    }
    for (long qe : qe_list) {
      require(qe >= 4 && qe % 2 == 0,
              "q1-claw --q-e must be even and at least 4 (2*table_size + 2 cipher queries)");
      const uint64_t ts = static_cast<uint64_t>((qe - 2) / 2);
      const auto start = Clock::now();
      const auto tally =
          run_attack_trials(opt.trials, opt.threads, opt.seed, stream, [&](Rng& rng) {
            const auto p = perm::Permutation::sample(opt.n, rng);
            const auto key = perm::sample_key(dist, opt.n, rng);
            attacks::ClawConfig cfg;
            cfg.delta = 1;
            cfg.table_size = ts;
            cfg.max_retries = 4;
            return attacks::q1_claw_attack(
                opt.n, p, [&](uint64_t x) { return perm::em_forward(p, key, x); }, cfg, rng);
          });
      // Cipher queries are exactly the difference table plus two holdouts;
      // everything else (amplification plus decode/verify lookups) hits the
      // public oracle.
      const double exact_qe = static_cast<double>(qe);
      const double mean_qp =
          (tally.sum_classical + tally.sum_quantum) / static_cast<double>(opt.trials) - exact_qe;
      rows.push_back(attack_row(name, opt, exact_qe, mean_qp, tally, ms_since(start)));
      ++stream;
    }
  } else {  // birthday
    if (qe_list.empty()) qe_list.push_back(2 * (long{1} << (opt.n / 2)) + 2);
    if (qp_list.empty()) qp_list.push_back(long{1} << (opt.n / 2));
    for (long qe : qe_list) {
      require(qe >= 4 && qe % 2 == 0,
              "birthday --q-e must be even and at least 4 (2*d_size + 2 cipher queries)");
      const uint64_t d = static_cast<uint64_t>((qe - 2) / 2);
      for (long qp : qp_list) {
        require(qp >= 1, "birthday --q-p (probe count) must be at least 1");
        const auto start = Clock::now();
        const auto tally =
            run_attack_trials(opt.trials, opt.threads, opt.seed, stream, [&](Rng& rng) {
              const auto p = perm::Permutation::sample(opt.n, rng);
              const auto key = perm::sample_key(dist, opt.n, rng);
              attacks::BirthdayConfig cfg;
              cfg.delta = 1;
              cfg.d_size = d;
              cfg.t_size = static_cast<uint64_t>(qp);
              return attacks::classical_birthday_attack(
                  opt.n, [&](uint64_t x) { return perm::em_forward(p, key, x); }, p, cfg, rng);
            });
        const double exact_qe = static_cast<double>(qe);
        const double mean_qp = tally.sum_classical / static_cast<double>(opt.trials) - exact_qe;
        rows.push_back(attack_row(name, opt, exact_qe, mean_qp, tally, ms_since(start)));
        ++stream;
      }
    }
  }
  return rows;
}

std::vector<ResultRow> drive_lemma(const std::string& name, const RunOpts& opt,
                                   const std::vector<long>& q_list, bool q_given) {
  check_opts(opt);
  require(name == "resample-perm" || name == "resample-fn" || name == "reprogram",
          "lemma name must be resample-perm, resample-fn, or reprogram");
  std::vector<ResultRow> rows;
  const auto base_row = [&](const std::string& row_name) {
    ResultRow row;
    row.experiment = "lemma";
    row.name = row_name;
    row.n = opt.n;
    row.variant = "-";
    row.trials = opt.trials;
    row.seed = opt.seed;
    return row;
  };

  if (name == "resample-perm" || name == "resample-fn") {
    std::vector<long> qs = q_list;
    if (qs.empty()) qs.push_back(1);
    uint64_t tag = 0;
    for (long q : qs) {
      require(q >= 0, "--q must be nonnegative");
      const auto start = Clock::now();
      const int n = opt.n;
      const auto est = estimate_advantage(
          [n, q, &name](bool world1, Rng& rng) {
            if (name == "resample-perm") {
              const auto adv = strategies::canonical_perm_resampler(n, q);
              return WorldOutcome{run_perm_resample_game(adv, n, world1, rng), 0.0};
            }
            const auto adv = strategies::fn_fixed_point_prober(n, q);
            return WorldOutcome{run_fn_resample_game(adv, n, n, world1, rng), 0.0};
          },
          opt.trials, opt.seed, opt.threads, tag);
      BoundParams bp;
      bp.n = opt.n;
      bp.m = opt.n;
      bp.q = static_cast<double>(q);
      const auto b = compute_bound(name, bp);
      auto row = base_row(name);
      row.q_e = 0;
      row.q_p = static_cast<double>(q);
      row.p_world1 = est.p_world1;
      row.p_world0 = est.p_world0;
      row.advantage = est.advantage;
      row.ci_halfwidth = est.ci_halfwidth;
      row.bound = b.value;
      row.vacuous = b.vacuous;
      row.wall_time_ms = ms_since(start);
      rows.push_back(row);
      ++tag;
    }
  } else {  // reprogram
    if (q_given) {
      throw ConfigError("the reprogramming strategies fix their own query schedules; "
                        "--q does not apply");
    }
    const int m = opt.n;
    const std::pair<std::string, std::function<ReprogramAdversary()>> cases[] = {
        {"reprogram-fixed-point", [m] { return strategies::reprogram_fixed_point(m, m); }},
        {"reprogram-geometric", [m] { return strategies::reprogram_geometric(m, m); }},
        {"reprogram-empty", [m] { return strategies::reprogram_empty(m, m); }},
    };
    uint64_t tag = 0;
    for (const auto& [row_name, make] : cases) {
      const auto start = Clock::now();
      const auto est = estimate_advantage(
          [&make](bool world1, Rng& rng) {
            const auto adv = make();
            const auto res = run_reprogram_game(adv, world1, rng);
            return WorldOutcome{res.guess, static_cast<double>(res.queries)};
          },
          opt.trials, opt.seed, opt.threads, tag);
      const double eps = reprogram_exact_epsilon(make());
      BoundParams bp;
      bp.q = est.mean_stat0;  // measured expected queries against the base function
      bp.epsilon = eps;
      const auto b = compute_bound("reprogram", bp);
      auto row = base_row(row_name);
      row.q_e = 0;
      row.q_p = est.mean_stat0;
      row.p_world1 = est.p_world1;
      row.p_world0 = est.p_world0;
      row.advantage = est.advantage;
      row.ci_halfwidth = est.ci_halfwidth;
      row.bound = b.value;
      row.vacuous = b.vacuous;
      row.wall_time_ms = ms_since(start);
      rows.push_back(row);
      ++tag;
    }
  }
  return rows;
}

// ---- hybrid -------------------------------------------------------------------

namespace {

struct EnsembleSummary {
  std::vector<uint64_t> cells;    // joint (guess, classical answers) outcome
  std::vector<char> guesses;
  std::vector<char> b1, b2, b3;   // bad-event flags
  double mean_stage_quantum = 0;  // quantum uses in the requested stage
  long wall_ms = 0;
};

uint64_t transcript_cell(const GameTranscript& tr, int n) {
  uint64_t cell = static_cast<uint64_t>(tr.guess);
  for (const auto& entry : tr.classical) cell = (cell << n) | entry.y;
  return cell;
}

EnsembleSummary collect_ensemble(long trials, int threads, uint64_t seed, uint64_t stream, int n,
                                 long stage, const std::function<GameTranscript(Rng&)>& runner) {
  const auto start = Clock::now();
  EnsembleSummary s;
  s.cells.resize(static_cast<size_t>(trials));
  s.guesses.resize(static_cast<size_t>(trials));
  s.b1.resize(static_cast<size_t>(trials));
  s.b2.resize(static_cast<size_t>(trials));
  s.b3.resize(static_cast<size_t>(trials));
  std::vector<double> stage_q(static_cast<size_t>(trials), 0.0);
  run_trials(trials, threads, [&](long t) {
    Rng rng = Rng::for_trial(seed, stream, static_cast<uint64_t>(t));
    const auto tr = runner(rng);
    const auto i = static_cast<size_t>(t);
    s.cells[i] = transcript_cell(tr, n);
    s.guesses[i] = tr.guess != 0 ? 1 : 0;
    s.b1[i] = tr.flags.bad1 ? 1 : 0;
    s.b2[i] = tr.flags.bad2 ? 1 : 0;
    s.b3[i] = tr.flags.bad3 ? 1 : 0;
    if (stage >= 0 && stage < static_cast<long>(tr.stage_quantum.size())) {
      stage_q[i] = static_cast<double>(tr.stage_quantum[static_cast<size_t>(stage)]);
    }
  });
  double sum = 0;
  for (double v : stage_q) sum += v;
  s.mean_stage_quantum = sum / static_cast<double>(trials);
  s.wall_ms = ms_since(start);
  return s;
}

double rate(const std::vector<char>& v) {
  long s = 0;
  for (char x : v) s += x;
  return static_cast<double>(s) / static_cast<double>(v.size());
}

}  // namespace

std::vector<ResultRow> drive_hybrid(const RunOpts& opt, long j, bool primed) {
  check_opts(opt);
  const auto dist = parse_two_sided_variant(opt.variant, "hybrid");
  require(j == 0 || j == 1,
          "j must be 0 or 1: the probe adversary makes two classical queries and the bridge "
          "hybrid needs j below that budget");
  const int n = opt.n;
  const long trials = opt.trials;
  const long budget = 2;  // the probe adversary's classical budget
  const auto adversary = [n] { return strategies::tv_pair_adversary(n); };

  const auto run = [&](uint64_t stream, const std::function<GameTranscript(Rng&)>& r) {
    return collect_ensemble(trials, opt.threads, opt.seed, stream, n, j + 1, r);
  };
  const auto real = run(0, [&](Rng& r) { return run_em_game(adversary(), n, dist, true, r); });
  const auto h0 = run(1, [&](Rng& r) { return run_hybrid(adversary(), n, dist, 0, false, r); });
  const auto ideal = run(2, [&](Rng& r) { return run_em_game(adversary(), n, dist, false, r); });
  const auto htop =
      run(3, [&](Rng& r) { return run_hybrid(adversary(), n, dist, budget, false, r); });
  const auto expt_cfg =
      run(4, [&](Rng& r) { return run_expt(adversary(), n, dist, j, primed, r); });
  const auto hyb_cfg =
      run(5, [&](Rng& r) { return run_hybrid(adversary(), n, dist, j, primed, r); });
  const auto hyb_bridge =
      run(6, [&](Rng& r) { return run_hybrid(adversary(), n, dist, j, true, r); });
  const auto hyb_next =
      run(7, [&](Rng& r) { return run_hybrid(adversary(), n, dist, j + 1, false, r); });
  const auto expt_plain =
      run(8, [&](Rng& r) { return run_expt(adversary(), n, dist, j, false, r); });
  const auto expt_boxed =
      run(9, [&](Rng& r) { return run_expt(adversary(), n, dist, j, true, r); });

  std::vector<ResultRow> rows;
  const auto base_row = [&](const std::string& row_name, long row_j) {
    ResultRow row;
    row.experiment = "hybrid";
    row.name = row_name;
    row.n = n;
    row.variant = opt.variant;
    row.q_e = 2;  // the probe adversary's classical budget
    row.q_p = 3;  // and its public-probe budget
    row.j = row_j;
    row.trials = trials;
    row.seed = opt.seed;
    return row;
  };
  const auto tv_row = [&](const std::string& row_name, long row_j, const EnsembleSummary& a,
                          const EnsembleSummary& b) {
    auto row = base_row(row_name, row_j);
    row.p_world1 = rate(a.guesses);
    row.p_world0 = rate(b.guesses);
    row.advantage = two_sample_tv(a.cells, b.cells);
    row.ci_halfwidth = expected_null_tv(a.cells, b.cells);
    row.bound = 0.0;  // the two ensembles are distribution-identical
    row.vacuous = false;
    row.wall_time_ms = a.wall_ms + b.wall_ms;
    return row;
  };
  const auto gap_row = [&](const std::string& row_name, const EnsembleSummary& a,
                           const EnsembleSummary& b, const BoundValue& bound) {
    auto row = base_row(row_name, j);
    row.p_world1 = rate(a.guesses);
    row.p_world0 = rate(b.guesses);
    row.advantage = std::fabs(row.p_world1 - row.p_world0);
    const double var = row.p_world1 * (1 - row.p_world1) + row.p_world0 * (1 - row.p_world0);
    row.ci_halfwidth =
        std::max(1.96 * std::sqrt(var / static_cast<double>(trials)), 1.0 / trials);
    row.bound = bound.value;
    row.vacuous = bound.vacuous;
    row.wall_time_ms = a.wall_ms + b.wall_ms;
    return row;
  };

  rows.push_back(tv_row("tv-h0-real", 0, h0, real));
  rows.push_back(tv_row("tv-htop-ideal", budget, htop, ideal));
  rows.push_back(
      tv_row(primed ? "tv-expt-hybrid-primed" : "tv-expt-hybrid", j, expt_cfg, hyb_cfg));
  {
    BoundParams bp;
    bp.n = n;
    bp.j = j;
    bp.q = hyb_bridge.mean_stage_quantum;
    rows.push_back(gap_row("gap-stage", hyb_bridge, hyb_next, compute_bound("hybrid-stage", bp)));
  }
  {
    BoundParams bp;
    bp.n = n;
    bp.j = j;
    bp.q_e = 2;
    bp.q_p = 3;
    rows.push_back(gap_row("gap-cut", expt_boxed, expt_plain, compute_bound("hybrid-cut", bp)));
  }
  const std::pair<std::string, const std::vector<char>*> bad_rows[] = {
      {"bad1-rate", &expt_cfg.b1}, {"bad2-rate", &expt_cfg.b2}, {"bad3-rate", &expt_cfg.b3}};
  for (const auto& [row_name, flags] : bad_rows) {
    auto row = base_row(row_name, j);
    row.p_world1 = rate(*flags);
    row.p_world0 = 0.0;
    row.advantage = row.p_world1;
    row.ci_halfwidth = binomial_ci(row.p_world1, trials);
    BoundParams bp;
    bp.n = n;
    bp.j = j;
    bp.q_e = 2;
    bp.q_p = 3;
    const auto b =
        compute_bound(row_name == "bad1-rate" ? "bad1-cap"
                                              : (row_name == "bad2-rate" ? "bad2-cap" : "bad3-cap"),
                      bp);
    row.bound = b.value;
    row.vacuous = b.vacuous;
    row.wall_time_ms = expt_cfg.wall_ms;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ResultRow> drive_sweep(const RunOpts& opt, const std::vector<long>& qe_list,
                                   const std::vector<long>& qp_list) {
  check_opts(opt);
  if (qe_list.empty() || qp_list.empty()) {
    throw ConfigError("empty sweep grid: provide comma lists for --q-e and --q-p");
  }
  const bool forward_only = opt.variant == "forward-only";
  const auto dist = forward_only ? perm::KeyDistribution::two_key_uniform
                                 : parse_two_sided_variant(opt.variant, "sweep");
  std::vector<ResultRow> rows;
  uint64_t tag = 0;
  for (long qe : qe_list) {
    for (long qp : qp_list) {
      require(qe >= 1 && qp >= 0, "sweep requires q_e >= 1 and q_p >= 0");
      const auto start = Clock::now();
      const int n = opt.n;
      const auto est = estimate_advantage(
          [n, qe, qp, forward_only, dist](bool world1, Rng& rng) {
            const auto adv =
                strategies::difference_matcher(static_cast<int>(qe), static_cast<int>(qp));
            const auto tr = forward_only ? run_forward_only_game(adv, n, world1, rng)
                                         : run_em_game(adv, n, dist, world1, rng);
            return WorldOutcome{tr.guess, 0.0};
          },
          opt.trials, opt.seed, opt.threads, tag);
      BoundParams bp;
      bp.n = opt.n;
      bp.q_e = static_cast<double>(qe);
      bp.q_p = static_cast<double>(qp);
      const auto b = compute_bound(forward_only ? "em-forward-only" : "em", bp);
      ResultRow row;
      row.experiment = "sweep";
      row.name = "diff-" + std::to_string(qe) + "x" + std::to_string(qp);
      row.n = opt.n;
      row.variant = opt.variant;
      row.q_e = static_cast<double>(qe);
      row.q_p = static_cast<double>(qp);
      row.trials = opt.trials;
      row.p_world1 = est.p_world1;
      row.p_world0 = est.p_world0;
      row.advantage = est.advantage;
      row.ci_halfwidth = est.ci_halfwidth;
      row.bound = b.value;
      row.vacuous = b.vacuous;
      row.seed = opt.seed;
      row.wall_time_ms = ms_since(start);
      rows.push_back(row);
      ++tag;
    }
  }
  return rows;
}

}  // namespace qemlab::games
