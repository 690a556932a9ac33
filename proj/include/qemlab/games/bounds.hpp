#pragma once

#include <string_view>

#include "qemlab/common.hpp"

namespace qemlab::games {

// Inputs to the advantage-bound formulas. Only the fields a formula reads
// need to be set; query counts are doubles because several formulas take
// measured expectations rather than integer budgets.
struct BoundParams {
  int n = 0;           // permutation width (bits)
  int m = 0;           // function-domain width (bits), for function games
  double q_e = 0;      // classical cipher queries
  double q_p = 0;      // quantum public-oracle queries (total)
  double q = 0;        // single-budget games: phase-1 / expected query count
  double epsilon = 0;  // max over x of Pr[x is reprogrammed]
  long j = 0;          // hybrid cut index
};

struct BoundValue {
  double raw = 0;      // formula value before clipping
  double value = 0;    // clipped to [0, 1]
  bool vacuous = false;  // raw >= 1: the bound says nothing at these sizes
};

// Advantage upper bounds, keyed by the game they govern:
//   "em"               10 * 2^{-n/2} * (q_e sqrt(q_p) + q_p sqrt(q_e))
//   "em-forward-only"  2^{-n/2} * (2 q_e sqrt(q_p) + 2 q_p sqrt(q_e))
//   "resample-fn"      1.5 sqrt(q / 2^m)
//   "resample-perm"    4 sqrt(q / 2^n)
//   "reprogram"        2 q sqrt(epsilon)
//   "hybrid-stage"     2 q sqrt(2 (j+1) / 2^n)   (q = stage-(j+1) expectation)
//   "hybrid-cut"       8 sqrt(q_p / 2^n) + 2 q_e / 2^n
//   "bad1-cap"         j / 2^n
//   "bad2-cap"         j / 2^n
//   "bad3-cap"         (q_e - j) / 2^n + 4 sqrt(q_p / 2^n)
//   "exact"            0 (games with provably zero advantage)
// Unknown ids throw ConfigError; negative parameters throw ConfigError.
BoundValue compute_bound(std::string_view formula, const BoundParams& p);

}  // namespace qemlab::games
