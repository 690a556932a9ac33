#include "qemlab/attacks/grover.hpp"

#include <cmath>

#include "qemlab/statevector.hpp"

namespace qemlab::attacks {

int grover_iteration_count(int n, uint64_t num_targets_hint) {
  require(n >= 1 && n <= 20, "grover: register width must be in [1, 20]");
  require(num_targets_hint >= 1, "grover: target count hint must be >= 1");
  const double dim = std::ldexp(1.0, n);
  const double t = static_cast<double>(num_targets_hint);
  if (t >= dim) return 0;
  return static_cast<int>(std::floor(0.25 * 3.14159265358979323846 * std::sqrt(dim / t)));
}

void apply_uniform_reflection(sim::StateVector& st, std::string_view reg) {
  const auto& layout = st.layout();
  require(layout.reg(layout.index_of(reg)).width == layout.total_qubits(),
          "uniform reflection: register must span the whole state");
  // Conjugate 2|0><0| - 1 by Hadamards.
  sim::apply_hadamard(st, reg);
  auto amps = st.amplitudes();
  for (uint64_t i = 1; i < amps.size(); ++i) amps[i] = -amps[i];
  sim::apply_hadamard(st, reg);
}

GroverOutcome grover_multi_target(int n, const std::function<bool(uint64_t)>& predicate,
                                  uint64_t num_targets_hint, Rng& rng) {
  const int k = grover_iteration_count(n, num_targets_hint);

  sim::RegisterLayout layout({{"X", n}});
  auto st = sim::init_basis_state(layout, {{"X", 0}});
  sim::apply_hadamard(st, "X");
  for (int it = 0; it < k; ++it) {
    sim::apply_phase_oracle(st, "X", predicate);
    apply_uniform_reflection(st, "X");
  }
  GroverOutcome out;
  out.candidate = sim::measure_register(st, "X", rng);
  out.iterations = k;
  return out;
}

double grover_success_probability(int n, uint64_t marked, int iterations) {
  require(n >= 1 && n <= 63, "grover_success_probability: bad width");
  const double frac = static_cast<double>(marked) / std::ldexp(1.0, n);
  if (frac >= 1.0) return 1.0;
  const double theta = std::asin(std::sqrt(frac));
  const double s = std::sin((2.0 * iterations + 1.0) * theta);
  return s * s;
}

}  // namespace qemlab::attacks
