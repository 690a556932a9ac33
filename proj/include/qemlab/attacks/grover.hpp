#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "qemlab/rng.hpp"
#include "qemlab/statevector.hpp"

namespace qemlab::attacks {

struct GroverOutcome {
  uint64_t candidate = 0;
  int iterations = 0;
};

// Number of amplification iterations for a domain of 2^n values with an
// estimated t marked: floor((pi/4) * sqrt(2^n / t)).
int grover_iteration_count(int n, uint64_t num_targets_hint);

// Amplitude amplification over a single n-qubit register: uniform start,
// phase oracle on the predicate, reflection about the uniform state, measured
// after the closed-form iteration count. The hint must be >= 1 (a vacuous
// predicate is rejected before iterating; it does not have to be exact).
GroverOutcome grover_multi_target(int n, const std::function<bool(uint64_t)>& predicate,
                                  uint64_t num_targets_hint, Rng& rng);

// Closed-form success probability sin^2((2k+1) * asin(sqrt(marked/2^n))) of
// measuring a marked value after k iterations with exactly `marked` targets.
double grover_success_probability(int n, uint64_t marked, int iterations);

// Reflection about the uniform superposition (the diffusion step) on a state
// consisting of the single register `reg`.
void apply_uniform_reflection(sim::StateVector& st, std::string_view reg);

}  // namespace qemlab::attacks
