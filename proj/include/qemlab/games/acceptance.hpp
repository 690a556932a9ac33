#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qemlab::games {

// Outcome of one pinned verification experiment. The suite covers the
// laboratory's checkable claims end to end: the three key-recovery attacks,
// the resampling and reprogramming game bounds, the hybrid-chain
// equivalences and bad-event caps, the bound non-violation sweep with the
// advantage-scaling regression, the sequential-measurement inequality, and
// the simulator's algebraic properties.
struct CriterionOutcome {
  int id = 0;            // 1-based criterion number
  std::string name;      // short label
  bool passed = false;
  std::string detail;    // measured numbers and the thresholds they met
  long wall_time_ms = 0;
};

// Number of criteria in the suite.
int criterion_count();

// Runs criterion `id` (1..criterion_count()). threads <= 0 selects the
// logical core count. Every criterion uses fixed internal seeds, so reruns
// are bit-for-bit reproducible regardless of thread count.
CriterionOutcome run_criterion(int id, int threads);

// Runs every criterion in order, streaming one PASS/FAIL line per criterion
// to `log` when given (pass nullptr for silence).
std::vector<CriterionOutcome> run_acceptance_suite(int threads, std::ostream* log);

}  // namespace qemlab::games
