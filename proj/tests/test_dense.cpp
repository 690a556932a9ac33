#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qemlab/dense.hpp"
#include "qemlab/rng.hpp"

using namespace qemlab;
using namespace qemlab::sim;
using cplx = std::complex<double>;

namespace {

std::vector<cplx> random_unit_vector(int dim, Rng& rng) {
  std::vector<cplx> v(static_cast<size_t>(dim));
  double norm = 0.0;
  for (auto& x : v) {
    // Box-Muller pairs give an isotropic Gaussian vector.
    const double u1 = 1.0 - rng.uniform01();
    const double u2 = rng.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    x = cplx{r * std::cos(6.283185307179586 * u2), r * std::sin(6.283185307179586 * u2)};
    norm += std::norm(x);
  }
  norm = std::sqrt(norm);
  for (auto& x : v) x /= norm;
  return v;
}

DenseOperator random_projector(int dim, int max_rank, Rng& rng) {
  const int rank = static_cast<int>(rng.below(static_cast<uint64_t>(max_rank) + 1));
  std::vector<std::vector<cplx>> basis;
  for (int i = 0; i < rank; ++i) basis.push_back(random_unit_vector(dim, rng));
  return DenseOperator::projector_onto(dim, basis);
}

}  // namespace

TEST_CASE("identity and zero are projectors, a generic matrix is not") {
  CHECK(DenseOperator::identity(4).is_projector());
  CHECK(DenseOperator::zero(4).is_projector());
  DenseOperator m = DenseOperator::identity(2);
  m.at(0, 1) = cplx{0.5, 0};
  CHECK_FALSE(m.is_projector());
}

TEST_CASE("projector_onto builds the orthogonal projector") {
  // Span of (1,0,0) and (1,1,0)/sqrt(2) is the xy-plane: projector diag(1,1,0).
  std::vector<std::vector<cplx>> basis{
      {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}},
      {cplx{1, 0} / std::sqrt(2.0), cplx{1, 0} / std::sqrt(2.0), cplx{0, 0}},
  };
  auto p = DenseOperator::projector_onto(3, basis);
  CHECK(p.is_projector());
  CHECK(std::abs(p.at(0, 0) - cplx{1, 0}) < 1e-12);
  CHECK(std::abs(p.at(1, 1) - cplx{1, 0}) < 1e-12);
  CHECK(std::abs(p.at(2, 2)) < 1e-12);
  CHECK(std::abs(p.at(0, 1)) < 1e-12);
}

TEST_CASE("sequential check with identity projectors gives zero on both sides") {
  Rng rng(3);
  auto psi = random_unit_vector(8, rng);
  std::vector<DenseOperator> projs(3, DenseOperator::identity(8));
  auto r = gentle_measurement_check(psi, projs);
  CHECK(r.lhs == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.rhs == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.overlap_shortfall == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.holds);
  CHECK(r.overlap_holds);
}

TEST_CASE("sequential check with an annihilating projector gives one on both sides") {
  // P projects onto a subspace orthogonal to psi: lhs = 1, eps = 1.
  std::vector<cplx> psi{cplx{1, 0}, cplx{0, 0}};
  std::vector<std::vector<cplx>> basis{{cplx{0, 0}, cplx{1, 0}}};
  std::vector<DenseOperator> projs{DenseOperator::projector_onto(2, basis)};
  auto r = gentle_measurement_check(psi, projs);
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.overlap_shortfall == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.holds);
  CHECK(r.overlap_holds);
}

TEST_CASE("a single tilted projector shows why the overlap shortfall needs the sqrt cap") {
  // P onto (cos a, sin a) with psi = (1,0): disturbance = eps exactly, while
  // the overlap shortfall is 2*eps - eps^2 > eps (it only obeys the sqrt cap).
  const double a = 0.4;
  std::vector<std::vector<cplx>> basis{{cplx{std::cos(a), 0}, cplx{std::sin(a), 0}}};
  std::vector<DenseOperator> projs{DenseOperator::projector_onto(2, basis)};
  std::vector<cplx> psi{cplx{1, 0}, cplx{0, 0}};
  auto r = gentle_measurement_check(psi, projs);
  const double eps = std::sin(a) * std::sin(a);
  CHECK(r.rhs == doctest::Approx(eps).epsilon(1e-9));
  CHECK(r.lhs == doctest::Approx(eps).epsilon(1e-9));  // |P psi - psi|^2 = eps here
  CHECK(r.overlap_shortfall == doctest::Approx(2 * eps - eps * eps).epsilon(1e-9));
  CHECK(r.overlap_shortfall > r.rhs);  // the un-squared cap would be violated
  CHECK(r.holds);
  CHECK(r.overlap_holds);
}

TEST_CASE("non-projector input is rejected") {
  Rng rng(8);
  auto psi = random_unit_vector(2, rng);
  DenseOperator m = DenseOperator::identity(2);
  m.at(0, 0) = cplx{0.5, 0};
  std::vector<DenseOperator> projs{m};
  CHECK_THROWS_AS(gentle_measurement_check(psi, projs), ConfigError);
}

TEST_CASE("caller-supplied epsilons must match the projector count and be probabilities") {
  std::vector<cplx> psi{cplx{1, 0}, cplx{0, 0}};
  std::vector<DenseOperator> projs{DenseOperator::identity(2)};
  std::vector<double> eps_bad_count{0.1, 0.1};
  CHECK_THROWS_AS(gentle_measurement_check(psi, projs, eps_bad_count), ConfigError);
  std::vector<double> eps_bad_value{1.5};
  CHECK_THROWS_AS(gentle_measurement_check(psi, projs, eps_bad_value), ConfigError);
}

TEST_CASE("disturbance bound holds on random instances") {
  Rng rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + static_cast<int>(rng.below(31));  // up to 32
    auto psi = random_unit_vector(dim, rng);
    const int count = 1 + static_cast<int>(rng.below(5));
    std::vector<DenseOperator> projs;
    for (int i = 0; i < count; ++i) projs.push_back(random_projector(dim, dim, rng));
    auto r = gentle_measurement_check(psi, projs);
    CHECK(r.holds);
    CHECK(r.lhs <= r.rhs + 1e-9);
    CHECK(r.overlap_holds);
    CHECK(r.overlap_shortfall <= r.overlap_cap + 1e-9);
  }
}
