#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qemlab/common.hpp"

namespace qemlab::sim {

// Small dense complex matrix (dim <= 64), row-major. Used for projector
// arithmetic on explicitly written-out vectors, not for circuit simulation.
class DenseOperator {
 public:
  DenseOperator(int dim, std::vector<std::complex<double>> entries);
  static DenseOperator identity(int dim);
  static DenseOperator zero(int dim);
  // Orthogonal projector onto the span of the given (not necessarily
  // orthonormal) vectors, built by Gram-Schmidt.
  static DenseOperator projector_onto(int dim,
                                      std::span<const std::vector<std::complex<double>>> basis);

  int dim() const { return dim_; }
  std::complex<double> at(int r, int c) const { return m_[static_cast<size_t>(r) * dim_ + c]; }
  std::complex<double>& at(int r, int c) { return m_[static_cast<size_t>(r) * dim_ + c]; }

  std::vector<std::complex<double>> apply(std::span<const std::complex<double>> v) const;

  // Hermitian and idempotent within tolerance 1e-9.
  bool is_projector(double tol = 1e-9) const;

 private:
  int dim_;
  std::vector<std::complex<double>> m_;
};

struct SequentialMeasurementCheck {
  double lhs;                // sequential disturbance |P_q...P_1|psi> - |psi>|^2
  double rhs;                // sum of the per-projector disturbances eps_i
  bool holds;                // lhs <= rhs + 1e-9
  double overlap_shortfall;  // 1 - |<psi|P_q...P_1|psi>|^2
  double overlap_cap;        // 2*sqrt(rhs), the valid cap for the shortfall
  bool overlap_holds;        // overlap_shortfall <= overlap_cap + 1e-9
};

// For unit |psi| and projectors P_1..P_q (P_1 applied first), checks the
// sequential-measurement disturbance bound |P_q...P_1 psi - psi|^2 <= sum of
// eps_i with eps_i = |(1-P_i)|psi>|^2, plus the derived overlap-shortfall cap
// 1 - |<psi|P_q...P_1|psi>|^2 <= 2*sqrt(sum eps_i). Supplying epsilons
// overrides the computed ones (each must be a probability at least as large as
// the tight value). Rejects non-projector inputs.
SequentialMeasurementCheck gentle_measurement_check(
    std::span<const std::complex<double>> psi, std::span<const DenseOperator> projectors);
SequentialMeasurementCheck gentle_measurement_check(
    std::span<const std::complex<double>> psi, std::span<const DenseOperator> projectors,
    std::span<const double> epsilons);

}  // namespace qemlab::sim
