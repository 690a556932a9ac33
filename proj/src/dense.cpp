#include "qemlab/dense.hpp"

#include <cmath>

namespace qemlab::sim {

namespace {
using cplx = std::complex<double>;

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  cplx s{0.0, 0.0};
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm_sq(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}
}  // namespace

DenseOperator::DenseOperator(int dim, std::vector<cplx> entries) : dim_(dim), m_(std::move(entries)) {
  require(dim >= 1 && dim <= 64, "DenseOperator: dim must be in [1, 64]");
  require(m_.size() == static_cast<size_t>(dim) * dim,
          "DenseOperator: entry count must be dim*dim");
}

DenseOperator DenseOperator::identity(int dim) {
  DenseOperator op = zero(dim);
  for (int i = 0; i < dim; ++i) op.at(i, i) = cplx{1.0, 0.0};
  return op;
}

DenseOperator DenseOperator::zero(int dim) {
  require(dim >= 1 && dim <= 64, "DenseOperator: dim must be in [1, 64]");
  return DenseOperator(dim, std::vector<cplx>(static_cast<size_t>(dim) * dim, cplx{0.0, 0.0}));
}

DenseOperator DenseOperator::projector_onto(int dim,
                                            std::span<const std::vector<cplx>> basis) {
  DenseOperator proj = zero(dim);
  std::vector<std::vector<cplx>> ortho;
  for (const auto& raw : basis) {
    require(static_cast<int>(raw.size()) == dim, "projector_onto: vector has wrong dimension");
    std::vector<cplx> v = raw;
    for (const auto& u : ortho) {
      const cplx c = inner(u, v);
      for (int i = 0; i < dim; ++i) v[static_cast<size_t>(i)] -= c * u[static_cast<size_t>(i)];
    }
    const double n = std::sqrt(norm_sq(v));
    if (n < 1e-12) continue;  // linearly dependent on earlier vectors
    for (auto& x : v) x /= n;
    ortho.push_back(std::move(v));
  }
  for (const auto& u : ortho)
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        proj.at(r, c) += u[static_cast<size_t>(r)] * std::conj(u[static_cast<size_t>(c)]);
  return proj;
}

std::vector<cplx> DenseOperator::apply(std::span<const cplx> v) const {
  require(static_cast<int>(v.size()) == dim_, "DenseOperator::apply: dimension mismatch");
  std::vector<cplx> out(static_cast<size_t>(dim_), cplx{0.0, 0.0});
  for (int r = 0; r < dim_; ++r) {
    cplx s{0.0, 0.0};
    for (int c = 0; c < dim_; ++c) s += at(r, c) * v[static_cast<size_t>(c)];
    out[static_cast<size_t>(r)] = s;
  }
  return out;
}

bool DenseOperator::is_projector(double tol) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
      cplx sq{0.0, 0.0};
      for (int k = 0; k < dim_; ++k) sq += at(r, k) * at(k, c);
      if (std::abs(sq - at(r, c)) > tol) return false;
    }
  return true;
}

SequentialMeasurementCheck gentle_measurement_check(std::span<const cplx> psi,
                                                    std::span<const DenseOperator> projectors) {
  std::vector<double> eps;
  eps.reserve(projectors.size());
  const int dim = static_cast<int>(psi.size());
  for (const auto& p : projectors) {
    require(p.dim() == dim, "gentle_measurement_check: projector dimension mismatch");
    require(p.is_projector(), "gentle_measurement_check: operator is not a projector");
    auto pv = p.apply(psi);
    double miss = 0.0;  // |(1-P)|psi>|^2
    for (size_t i = 0; i < pv.size(); ++i) miss += std::norm(psi[i] - pv[i]);
    eps.push_back(miss);
  }
  return gentle_measurement_check(psi, projectors, eps);
}

SequentialMeasurementCheck gentle_measurement_check(std::span<const cplx> psi,
                                                    std::span<const DenseOperator> projectors,
                                                    std::span<const double> epsilons) {
  const int dim = static_cast<int>(psi.size());
  require(dim >= 1 && dim <= 64, "gentle_measurement_check: dimension must be in [1, 64]");
  require(std::abs(norm_sq(psi) - 1.0) <= 1e-9, "gentle_measurement_check: state must be unit");
  require(epsilons.size() == projectors.size(),
          "gentle_measurement_check: one epsilon per projector required");
  double rhs = 0.0;
  for (double e : epsilons) {
    require(e >= 0.0 && e <= 1.0 + 1e-12, "gentle_measurement_check: epsilon must be a probability");
    rhs += e;
  }
  std::vector<cplx> v(psi.begin(), psi.end());
  for (const auto& p : projectors) {
    require(p.dim() == dim, "gentle_measurement_check: projector dimension mismatch");
    require(p.is_projector(), "gentle_measurement_check: operator is not a projector");
    v = p.apply(v);
  }
  double disturbance = 0.0;
  for (size_t i = 0; i < v.size(); ++i) disturbance += std::norm(v[i] - psi[i]);
  SequentialMeasurementCheck r{};
  r.lhs = disturbance;
  r.rhs = rhs;
  r.holds = r.lhs <= r.rhs + 1e-9;
  r.overlap_shortfall = 1.0 - std::norm(inner(psi, v));
  r.overlap_cap = 2.0 * std::sqrt(rhs);
  r.overlap_holds = r.overlap_shortfall <= r.overlap_cap + 1e-9;
  return r;
}

}  // namespace qemlab::sim
