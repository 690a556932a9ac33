#include <doctest.h>

#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "qemlab/cipher.hpp"
#include "qemlab/permutation.hpp"

using namespace qemlab;
using namespace qemlab::perm;

TEST_CASE("sampled permutations are bijections") {
  Rng rng(11);
  for (int n : {1, 3, 6}) {
    auto p = Permutation::sample(n, rng);
    std::set<uint64_t> image;
    for (uint64_t x = 0; x < p.domain_size(); ++x) {
      CHECK(p.inverse(p.forward(x)) == x);
      image.insert(p.forward(x));
    }
    CHECK(image.size() == p.domain_size());
  }
}

TEST_CASE("permutation sampling is roughly uniform over S_3-on-bits") {
  // n=2 has 24 permutations; frequencies should be near 1/24.
  Rng rng(200);
  std::map<std::vector<uint32_t>, int> counts;
  const int draws = 48000;
  for (int i = 0; i < draws; ++i) {
    auto p = Permutation::sample(2, rng);
    counts[std::vector<uint32_t>(p.table().begin(), p.table().end())]++;
  }
  CHECK(counts.size() == 24);
  for (const auto& [tbl, c] : counts)
    CHECK(static_cast<double>(c) / draws == doctest::Approx(1.0 / 24).epsilon(0.15));
}

TEST_CASE("non-bijective tables are rejected") {
  CHECK_THROWS_AS(Permutation::from_table(2, {0, 1, 1, 3}), ConfigError);
  CHECK_THROWS_AS(Permutation::from_table(2, {0, 1, 2}), ConfigError);
  CHECK_THROWS_AS(Permutation::from_table(2, {0, 1, 2, 4}), ConfigError);
}

TEST_CASE("compose applies the inner permutation first") {
  // f = swap(0,1), g = swap(1,2) on n=2: f(g(x)) at x=1 -> f(2) = 2, at x=2 -> f(1) = 0.
  auto f = make_swap(2, 0, 1);
  auto g = make_swap(2, 1, 2);
  auto fg = compose(f, g);
  CHECK(fg.forward(0) == 1);
  CHECK(fg.forward(1) == 2);
  CHECK(fg.forward(2) == 0);
  CHECK(fg.forward(3) == 3);
}

TEST_CASE("invert gives the two-sided inverse") {
  Rng rng(13);
  auto p = Permutation::sample(4, rng);
  auto pi = invert(p);
  for (uint64_t x = 0; x < 16; ++x) {
    CHECK(pi.forward(p.forward(x)) == x);
    CHECK(p.forward(pi.forward(x)) == x);
  }
}

TEST_CASE("swap conjugation: P o swap(s0,s1) equals swap(P(s0),P(s1)) o P") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 6;
    auto p = Permutation::sample(n, rng);
    const uint64_t s0 = rng.bits(n), s1 = rng.bits(n);
    auto lhs = compose(p, make_swap(n, s0, s1));
    auto rhs = compose(make_swap(n, p.forward(s0), p.forward(s1)), p);
    for (uint64_t x = 0; x < p.domain_size(); ++x) CHECK(lhs.forward(x) == rhs.forward(x));
  }
}

TEST_CASE("keyed cipher round-trips and matches its definition") {
  Rng rng(23);
  const int n = 5;
  auto p = Permutation::sample(n, rng);
  auto k = sample_key(KeyDistribution::two_key_uniform, n, rng);
  for (uint64_t x = 0; x < p.domain_size(); ++x) {
    const uint64_t y = em_forward(p, k, x);
    CHECK(y == (p.forward(x ^ k.k1) ^ k.k2));
    CHECK(em_inverse(p, k, y) == x);
  }
}

TEST_CASE("one-key distribution ties the two key halves") {
  Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    auto k = sample_key(KeyDistribution::one_key, 6, rng);
    CHECK(k.k1 == k.k2);
    CHECK(k.k1 < 64);
  }
}

TEST_CASE("two-key distribution draws independent halves") {
  Rng rng(31);
  int diff = 0;
  for (int i = 0; i < 200; ++i) {
    auto k = sample_key(KeyDistribution::two_key_uniform, 6, rng);
    if (k.k1 != k.k2) ++diff;
  }
  CHECK(diff > 150);  // collision chance is 1/64 per draw
}

TEST_CASE("hex serialization round-trips with lowercase newline-terminated lines") {
  auto p = Permutation::from_table(2, {2, 0, 3, 1});
  std::ostringstream os;
  write_hex_lines(os, p.table());
  CHECK(os.str() == "2\n0\n3\n1\n");

  std::ostringstream os2;
  const uint32_t vals[3] = {0xab, 0x1f, 0};
  write_hex_lines(os2, vals);
  CHECK(os2.str() == "ab\n1f\n0\n");

  std::istringstream is(os2.str());
  auto back = read_hex_lines(is);
  REQUIRE(back.size() == 3);
  CHECK(back[0] == 0xab);
  CHECK(back[1] == 0x1f);
  CHECK(back[2] == 0);
}

TEST_CASE("key hex serialization round-trips") {
  Key k{0x1a, 0x2b};
  std::ostringstream os;
  write_key_hex(os, k);
  CHECK(os.str() == "1a\n2b\n");
  std::istringstream is(os.str());
  CHECK(read_key_hex(is) == k);
}

TEST_CASE("uniform function tables hit the requested shape") {
  Rng rng(37);
  auto f = FunctionTable::sample(4, 3, rng);
  CHECK(f.domain_size() == 16);
  for (uint64_t x = 0; x < 16; ++x) CHECK(f(x) < 8);
}
