#include <doctest.h>

#include <set>
#include <vector>

#include "qemlab/gf2.hpp"
#include "qemlab/rng.hpp"

using namespace qemlab;
using namespace qemlab::attacks;

namespace {

// Independent check: the set of v with row.v == 0 for all rows, by brute force.
std::set<uint64_t> brute_nullspace(const std::vector<uint64_t>& rows, int width) {
  std::set<uint64_t> out;
  for (uint64_t v = 0; v < (uint64_t{1} << width); ++v) {
    bool ok = true;
    for (uint64_t r : rows) {
      if (__builtin_parityll(r & v)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(v);
  }
  return out;
}

std::set<uint64_t> span_of(const std::vector<uint64_t>& basis) {
  std::set<uint64_t> out{0};
  for (uint64_t b : basis) {
    std::set<uint64_t> next = out;
    for (uint64_t v : out) next.insert(v ^ b);
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("rank grows only on independent rows") {
  Gf2Solver s(4);
  CHECK(s.add_row(0b1100));
  CHECK(s.add_row(0b0110));
  CHECK_FALSE(s.add_row(0b1010));  // xor of the first two
  CHECK_FALSE(s.add_row(0));
  CHECK(s.rank() == 2);
}

TEST_CASE("nullspace matches brute force on fixed rows") {
  std::vector<uint64_t> rows{0b1100, 0b0110};
  Gf2Solver s(4);
  for (uint64_t r : rows) s.add_row(r);
  auto basis = s.nullspace_basis();
  CHECK(basis.size() == 2);  // width 4, rank 2
  CHECK(span_of(basis) == brute_nullspace(rows, 4));
}

TEST_CASE("nullspace matches brute force on random instances") {
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const int width = 2 + static_cast<int>(rng.below(5));  // 2..6
    const int count = static_cast<int>(rng.below(8));
    std::vector<uint64_t> rows;
    Gf2Solver s(width);
    for (int i = 0; i < count; ++i) {
      uint64_t r = rng.bits(width);
      rows.push_back(r);
      s.add_row(r);
    }
    auto basis = s.nullspace_basis();
    CHECK(static_cast<int>(basis.size()) == width - s.rank());
    CHECK(span_of(basis) == brute_nullspace(rows, width));
  }
}

TEST_CASE("rank n-1 leaves a single nonzero nullspace vector") {
  // Rows orthogonal to s = 0b1011 on width 4.
  const uint64_t secret = 0b1011;
  Rng rng(17);
  Gf2Solver s(4);
  while (s.rank() < 3) {
    uint64_t u = rng.bits(4);
    if (__builtin_parityll(u & secret) == 0) s.add_row(u);
  }
  auto basis = s.nullspace_basis();
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == secret);
}
