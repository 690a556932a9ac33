#include <doctest.h>

#include <vector>

#include "qemlab/reprogram.hpp"

using namespace qemlab;
using namespace qemlab::perm;

TEST_CASE("transcript enforces distinct inputs and outputs") {
  Transcript t;
  t.append(0, 1);
  CHECK_THROWS_AS(t.append(0, 2), ConfigError);
  CHECK_THROWS_AS(t.append(2, 1), ConfigError);
  t.append_any_y(2, 1);  // function-valued oracles may repeat outputs
  CHECK(t.size() == 2);
  CHECK_THROWS_AS(t.append_any_y(2, 3), ConfigError);
}

TEST_CASE("empty transcript programs nothing") {
  Rng rng(5);
  auto p = Permutation::sample(4, rng);
  auto q = perm_reprogram(p, Transcript{}, Key{3, 7});
  for (uint64_t x = 0; x < 16; ++x) CHECK(q.forward(x) == p.forward(x));
}

TEST_CASE("single-entry programming on the identity permutation, derived by hand") {
  // P = identity on n=2, k = (0,0), T = {(0,1)}: transposition endpoints are
  // P(0)=0 and 1, so the programmed table is [1,0,2,3].
  auto p = Permutation::identity(2);
  Transcript t;
  t.append(0, 1);
  auto q = perm_reprogram(p, t, Key{0, 0});
  CHECK(q.forward(0) == 1);
  CHECK(q.forward(1) == 0);
  CHECK(q.forward(2) == 2);
  CHECK(q.forward(3) == 3);
  CHECK(em_forward(q, Key{0, 0}, 0) == 1);
}

TEST_CASE("single-entry programming with a nontrivial key, derived by hand") {
  // P = [2,0,3,1], k = (1,2), T = {(0,3)}: endpoints P(0^1)=P(1)=0 and 3^2=1,
  // so outputs 0 and 1 swap places: programmed table [2,1,3,0].
  auto p = Permutation::from_table(2, {2, 0, 3, 1});
  Transcript t;
  t.append(0, 3);
  const Key k{1, 2};
  auto q = perm_reprogram(p, t, k);
  CHECK(q.forward(0) == 2);
  CHECK(q.forward(1) == 1);
  CHECK(q.forward(2) == 3);
  CHECK(q.forward(3) == 0);
  CHECK(em_forward(q, k, 0) == 3);
}

TEST_CASE("internal collision between entries cancels the programming, derived by hand") {
  // P = identity, k = (0,0), T = {(0,1),(1,0)}: the second entry's endpoints
  // (P(1)=1, 0) coincide with the first entry's (0, 1), the transpositions
  // cancel, and the programmed permutation is P itself. This is exactly the
  // internal-collision caveat: P(x_1) = 0 equals y_2 ^ k2 = 0.
  auto p = Permutation::identity(2);
  Transcript t;
  t.append(0, 1);
  t.append(1, 0);
  auto q = perm_reprogram(p, t, Key{0, 0});
  for (uint64_t x = 0; x < 4; ++x) CHECK(q.forward(x) == x);
  CHECK(em_forward(q, Key{0, 0}, 0) == 0);  // the programmed point is lost
}

TEST_CASE("programmed permutation hits the transcript absent internal collisions") {
  Rng rng(6021);
  const int n = 8;
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto p = Permutation::sample(n, rng);
    const Key k{rng.bits(n), rng.bits(n)};
    Transcript t;
    const int entries = 1 + static_cast<int>(rng.below(4));
    bool ok = true;
    for (int i = 0; i < entries && ok; ++i) {
      // distinct x and y as the transcript type requires
      for (int attempt = 0; attempt < 64; ++attempt) {
        const uint64_t x = rng.bits(n), y = rng.bits(n);
        if (!t.contains_x(x) && !t.contains_y(y)) {
          t.append(x, y);
          break;
        }
        if (attempt == 63) ok = false;
      }
    }
    auto q = perm_reprogram(p, t, k);

    // Internal collision: P(x_i ^ k1) == y_j ^ k2 for i != j.
    bool collision = false;
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = 0; j < t.size(); ++j)
        if (i != j && p.forward(t[i].x ^ k.k1) == (t[j].y ^ k.k2)) collision = true;
    if (collision) continue;

    ++checked;
    for (size_t i = 0; i < t.size(); ++i) CHECK(em_forward(q, k, t[i].x) == t[i].y);

    // The programming touches at most 2|T| positions of the table.
    int moved = 0;
    for (uint64_t x = 0; x < p.domain_size(); ++x)
      if (q.forward(x) != p.forward(x)) ++moved;
    CHECK(moved <= 2 * static_cast<int>(t.size()));
  }
  CHECK(checked > 900);  // collisions are rare at n=8
}

TEST_CASE("programming rejects duplicate transcript entries") {
  auto p = Permutation::identity(3);
  Transcript t;
  t.append_any_y(1, 4);
  t.append_any_y(2, 4);  // duplicate y, legal for functions but not here
  CHECK_THROWS_AS(perm_reprogram(p, t, Key{0, 0}), ConfigError);
}

TEST_CASE("function point reprogramming replaces exactly one entry") {
  Rng rng(8);
  auto f = FunctionTable::sample(4, 4, rng);
  auto g = fn_reprogram_point(f, 5, 9);
  for (uint64_t x = 0; x < 16; ++x) CHECK(g(x) == (x == 5 ? 9u : f(x)));
}

TEST_CASE("function set reprogramming replaces all pairs and rejects duplicates") {
  Rng rng(9);
  auto f = FunctionTable::sample(4, 4, rng);
  ReprogramSet b;
  b.insert(1, 14);
  b.insert(7, 0);
  CHECK_THROWS_AS(b.insert(1, 3), ConfigError);
  auto g = fn_reprogram_set(f, b);
  for (uint64_t x = 0; x < 16; ++x) {
    if (x == 1) CHECK(g(x) == 14);
    else if (x == 7) CHECK(g(x) == 0);
    else CHECK(g(x) == f(x));
  }
}

TEST_CASE("forward-only programming shifts transcript inputs by the key") {
  Rng rng(10);
  auto f = FunctionTable::sample(5, 5, rng);
  Transcript t;
  t.append_any_y(3, 17);
  t.append_any_y(9, 17);  // repeated output is fine for functions
  const uint64_t k = 21;
  auto g = fwd_only_reprogram(f, t, k);
  for (uint64_t x = 0; x < 32; ++x) {
    if ((x ^ k) == 3 || (x ^ k) == 9) CHECK(g(x) == 17);
    else CHECK(g(x) == f(x));
  }
  // Keyed evaluation returns the transcript outputs at the transcript inputs.
  CHECK(keyed_fn_forward(g, k, 3) == 17);
  CHECK(keyed_fn_forward(g, k, 9) == 17);
}
