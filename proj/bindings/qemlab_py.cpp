// Python bindings: the laboratory's main operations (bound formulas, the
// key-recovery attacks, the resampling/reprogramming games, hybrid-chain
// measurements, advantage sweeps, and the acceptance suite) with result rows
// rendered as dicts in the CSV column order. Long-running entry points drop
// the interpreter lock; configuration errors surface as ValueError.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qemlab/common.hpp"
#include "qemlab/games/acceptance.hpp"
#include "qemlab/games/bounds.hpp"
#include "qemlab/games/csvio.hpp"
#include "qemlab/games/driver.hpp"

namespace py = pybind11;
using namespace qemlab::games;

namespace {

py::dict row_to_dict(const ResultRow& row) {
  py::dict d;
  d["experiment"] = row.experiment;
  d["name"] = row.name;
  d["n"] = row.n;
  d["variant"] = row.variant;
  d["q_e"] = row.q_e;
  d["q_p"] = row.q_p;
  d["j"] = row.j;
  d["trials"] = row.trials;
  d["p_world1"] = row.p_world1;
  d["p_world0"] = row.p_world0;
  d["advantage"] = row.advantage;
  d["ci_halfwidth"] = row.ci_halfwidth;
  d["bound"] = row.bound;
  d["seed"] = row.seed;
  d["wall_time_ms"] = row.wall_time_ms;
  d["vacuous"] = row.vacuous;
  return d;
}

py::list rows_to_list(const std::vector<ResultRow>& rows) {
  py::list out;
  for (const auto& row : rows) out.append(row_to_dict(row));
  return out;
}

RunOpts make_opts(int n, const std::string& variant, long trials, uint64_t seed, int threads) {
  RunOpts opt;
  opt.n = n;
  opt.variant = variant;
  opt.trials = trials;
  opt.seed = seed;
  opt.threads = threads;
  return opt;
}

}  // namespace

PYBIND11_MODULE(qemlab, m) {
  m.doc() = "distinguishing-game laboratory for a keyed-permutation construction";

  m.def("max_qubits", &qemlab::max_qubits,
        "Simulator qubit cap (QEMLAB_MAX_QUBITS overrides).");

  m.def(
      "compute_bound",
      [](const std::string& id, int n, int m_bits, double q_e, double q_p, double q,
         double epsilon, long j) {
        BoundParams bp;
        bp.n = n;
        bp.m = m_bits;
        bp.q_e = q_e;
        bp.q_p = q_p;
        bp.q = q;
        bp.epsilon = epsilon;
        bp.j = j;
        const auto b = compute_bound(id, bp);
        py::dict d;
        d["raw"] = b.raw;
        d["value"] = b.value;
        d["vacuous"] = b.vacuous;
        return d;
      },
      py::arg("id"), py::kw_only(), py::arg("n") = 0, py::arg("m") = 0, py::arg("q_e") = 0.0,
      py::arg("q_p") = 0.0, py::arg("q") = 0.0, py::arg("epsilon") = 0.0, py::arg("j") = 0,
      "Advantage upper bound for the named game; returns raw, clipped value, and the "
      "vacuous flag.");

  m.def(
      "attack",
      [](const std::string& name, int n, const std::string& variant, long trials, uint64_t seed,
         int threads, std::vector<long> q_e, std::vector<long> q_p) {
        std::vector<ResultRow> rows;
        {
          const py::gil_scoped_release release;
          rows = drive_attack(name, make_opts(n, variant, trials, seed, threads), std::move(q_e),
                              std::move(q_p));
        }
        return rows_to_list(rows);
      },
      py::arg("name"), py::arg("n"), py::kw_only(), py::arg("variant") = "two-key",
      py::arg("trials") = 100, py::arg("seed") = 1, py::arg("threads") = 0,
      py::arg("q_e") = std::vector<long>{}, py::arg("q_p") = std::vector<long>{},
      "Key-recovery attack (simon-q2, q1-claw, birthday): success-rate rows.");

  m.def(
      "lemma",
      [](const std::string& name, int n, std::optional<std::vector<long>> q, long trials,
         uint64_t seed, int threads) {
        std::vector<ResultRow> rows;
        {
          const py::gil_scoped_release release;
          rows = drive_lemma(name, make_opts(n, "two-key", trials, seed, threads),
                             q.value_or(std::vector<long>{}), q.has_value());
        }
        return rows_to_list(rows);
      },
      py::arg("name"), py::arg("n"), py::kw_only(), py::arg("q") = py::none(),
      py::arg("trials") = 1000, py::arg("seed") = 1, py::arg("threads") = 0,
      "Resampling/reprogramming game (resample-perm, resample-fn, reprogram): advantage "
      "rows with their bounds.");

  m.def(
      "hybrid",
      [](int n, long j, bool primed, const std::string& variant, long trials, uint64_t seed,
         int threads) {
        std::vector<ResultRow> rows;
        {
          const py::gil_scoped_release release;
          rows = drive_hybrid(make_opts(n, variant, trials, seed, threads), j, primed);
        }
        return rows_to_list(rows);
      },
      py::arg("n"), py::kw_only(), py::arg("j") = 0, py::arg("primed") = false,
      py::arg("variant") = "two-key", py::arg("trials") = 1000, py::arg("seed") = 1,
      py::arg("threads") = 0,
      "Hybrid-chain equivalence, gap, and bad-event rows at cut j.");

  m.def(
      "sweep",
      [](int n, const std::vector<long>& q_e, const std::vector<long>& q_p,
         const std::string& variant, long trials, uint64_t seed, int threads) {
        std::vector<ResultRow> rows;
        {
          const py::gil_scoped_release release;
          rows = drive_sweep(make_opts(n, variant, trials, seed, threads), q_e, q_p);
        }
        return rows_to_list(rows);
      },
      py::arg("n"), py::arg("q_e"), py::arg("q_p"), py::kw_only(),
      py::arg("variant") = "two-key", py::arg("trials") = 1000, py::arg("seed") = 1,
      py::arg("threads") = 0,
      "Advantage-vs-bound grid over (q_e, q_p) for the difference matcher.");

  m.def("criterion_count", &criterion_count, "Number of acceptance criteria.");

  m.def(
      "run_criterion",
      [](int id, int threads) {
        CriterionOutcome outcome;
        {
          const py::gil_scoped_release release;
          outcome = run_criterion(id, threads);
        }
        py::dict d;
        d["id"] = outcome.id;
        d["name"] = outcome.name;
        d["passed"] = outcome.passed;
        d["detail"] = outcome.detail;
        d["wall_time_ms"] = outcome.wall_time_ms;
        return d;
      },
      py::arg("id"), py::kw_only(), py::arg("threads") = 0,
      "Run one acceptance criterion (1..criterion_count()).");

  m.def("csv_header", &csv_header, "The CSV schema header line (without newline).");
}
