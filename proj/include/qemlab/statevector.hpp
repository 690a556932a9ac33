#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qemlab/layout.hpp"
#include "qemlab/rng.hpp"

namespace qemlab::sim {

using amp_t = std::complex<double>;

// Dense statevector over a register layout. Operations mutate in place and
// preserve the 2-norm to within 1e-9; measurement renormalizes explicitly.
class StateVector {
 public:
  explicit StateVector(RegisterLayout layout);

  const RegisterLayout& layout() const { return layout_; }
  std::span<const amp_t> amplitudes() const { return amps_; }
  std::span<amp_t> amplitudes() { return amps_; }
  uint64_t dimension() const { return amps_.size(); }

  double norm_sq() const;
  void renormalize();

 private:
  RegisterLayout layout_;
  std::vector<amp_t> amps_;
};

// |v_0>|v_1>...: each pair names a register and its initial basis value.
// Unnamed registers start at 0. Throws ConfigError if a value exceeds the
// register width or a name is unknown.
StateVector init_basis_state(const RegisterLayout& layout,
                             std::span<const std::pair<std::string_view, uint64_t>> values);
StateVector init_basis_state(
    const RegisterLayout& layout,
    std::initializer_list<std::pair<std::string_view, uint64_t>> values);

// Hadamard on every qubit of the named register.
void apply_hadamard(StateVector& st, std::string_view reg);

// |x>|y> -> |x>|y ^ f(x)>. f's outputs must fit the out register. The two
// registers must be distinct. f is given by a lookup table of size 2^in_width.
void apply_xor_oracle(StateVector& st, std::string_view in_reg, std::string_view out_reg,
                      std::span<const uint32_t> f);

// |c>|x>|y> -> |c>|x>|y ^ (c ? f(x) : 0)> with a 1-qubit control register.
void apply_controlled_xor_oracle(StateVector& st, std::string_view ctrl_reg,
                                 std::string_view in_reg, std::string_view out_reg,
                                 std::span<const uint32_t> f);

// Multiplies the amplitude of every basis state whose register value satisfies
// the predicate by -1.
void apply_phase_oracle(StateVector& st, std::string_view reg,
                        const std::function<bool(uint64_t)>& predicate);

// Samples an outcome for the register from the Born distribution, collapses
// the state onto it, renormalizes, and returns the outcome.
uint64_t measure_register(StateVector& st, std::string_view reg, Rng& rng);

// Probability that measuring the register would yield the given value.
double probability_of(const StateVector& st, std::string_view reg, uint64_t value);

}  // namespace qemlab::sim
