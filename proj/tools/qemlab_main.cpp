// qemlab: batch front door for the distinguishing-game laboratory.
//
// Subcommands: attack (key-recovery attacks), lemma (resampling and
// reprogramming games), hybrid (hybrid-chain equivalence and bad-event
// measurements), sweep (advantage-vs-bound grids), selftest (the pinned
// acceptance suite). Every subcommand except selftest emits CSV rows in a
// fixed schema; (seed, config) determines every column except wall_time_ms.
// Exit codes: 0 success, 1 selftest criterion failure, 2 configuration error.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qemlab/common.hpp"
#include "qemlab/games/acceptance.hpp"
#include "qemlab/games/csvio.hpp"
#include "qemlab/games/driver.hpp"

namespace {

using namespace qemlab::games;

int emit(const std::string& out_path, const std::vector<ResultRow>& rows) {
  if (out_path.empty()) {
    write_csv(std::cout, rows);
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw qemlab::ConfigError("cannot open output file: " + out_path);
  write_csv(f, rows);
  return 0;
}

int cmd_selftest(int threads) {
  const auto outcomes = run_acceptance_suite(threads, &std::cout);
  bool all = true;
  for (const auto& o : outcomes) all &= o.passed;
  std::cout << (all ? "selftest: all criteria passed" : "selftest: criterion failure") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distinguishing-game laboratory for a keyed-permutation construction"};
  app.require_subcommand(1);

  RunOpts opt;
  std::string name;
  std::string out;
  std::vector<long> qe_list;
  std::vector<long> qp_list;
  std::vector<long> q_list;
  long j = 0;
  bool primed = false;

  const auto add_common = [&](CLI::App* sub, long default_trials) {
    sub->add_option("--n", opt.n, "problem width in bits")->required();
    sub->add_option("--trials", opt.trials, "Monte-Carlo trials per row")
        ->default_val(default_trials)
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "master seed")->default_val(1);
    sub->add_option("--threads", opt.threads, "worker threads (0 = logical cores)")
        ->default_val(0);
    sub->add_option("--out", out, "output CSV path (default: standard output)");
  };
  const auto add_variant = [&](CLI::App* sub, bool with_forward_only) {
    std::vector<std::string> allowed = {"two-key", "one-key"};
    if (with_forward_only) allowed.push_back("forward-only");
    sub->add_option("--variant", opt.variant, "key schedule of the construction")
        ->default_val("two-key")
        ->check(CLI::IsMember(allowed));
  };

  auto* attack = app.add_subcommand("attack", "run a key-recovery attack, report success rate");
  attack->add_option("--name", name, "attack to run")
      ->required()
      ->check(CLI::IsMember({"simon-q2", "q1-claw", "birthday"}));
  add_common(attack, 100);
  add_variant(attack, false);
  attack->add_option("--q-e", qe_list, "cipher-query budget per point (comma list)")
      ->delimiter(',');
  attack->add_option("--q-p", qp_list, "public-probe budget per point (comma list)")
      ->delimiter(',');

  auto* lemma = app.add_subcommand("lemma", "measure a resampling/reprogramming game bound");
  lemma->add_option("--name", name, "game to run")
      ->required()
      ->check(CLI::IsMember({"resample-perm", "resample-fn", "reprogram"}));
  add_common(lemma, 1000);
  auto* q_opt =
      lemma->add_option("--q", q_list, "phase-1 query budgets (comma list)")->delimiter(',');

  auto* hybrid = app.add_subcommand(
      "hybrid", "hybrid-chain equivalence, gap, and bad-event measurements at cut j");
  add_common(hybrid, 1000);
  add_variant(hybrid, false);
  hybrid->add_option("--j", j, "hybrid cut index")->default_val(0);
  hybrid->add_flag("--primed", primed, "use the corrected (boxed) cut experiment");

  auto* sweep = app.add_subcommand("sweep", "advantage-vs-bound grid over (q_e, q_p)");
  add_common(sweep, 1000);
  add_variant(sweep, true);
  sweep->add_option("--q-e", qe_list, "cipher-query budgets (comma list)")->delimiter(',');
  sweep->add_option("--q-p", qp_list, "public-probe budgets (comma list)")->delimiter(',');

  auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
  selftest->add_option("--threads", opt.threads, "worker threads (0 = logical cores)")
      ->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*attack) return emit(out, drive_attack(name, opt, qe_list, qp_list));
    if (*lemma) return emit(out, drive_lemma(name, opt, q_list, q_opt->count() > 0));
    if (*hybrid) return emit(out, drive_hybrid(opt, j, primed));
    if (*sweep) return emit(out, drive_sweep(opt, qe_list, qp_list));
    return cmd_selftest(opt.threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
