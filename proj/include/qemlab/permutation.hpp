#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qemlab/common.hpp"
#include "qemlab/rng.hpp"

namespace qemlab::perm {

// Bijection on {0,1}^n held as forward and inverse lookup tables. Immutable
// after construction; safe to share across threads.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation from_table(int n, std::vector<uint32_t> table);
  // Uniform permutation via Fisher-Yates.
  static Permutation sample(int n, Rng& rng);

  int bits() const { return n_; }
  uint64_t domain_size() const { return fwd_.size(); }

  uint64_t forward(uint64_t x) const { return fwd_[x]; }
  uint64_t inverse(uint64_t y) const { return inv_[y]; }
  uint64_t operator()(uint64_t x) const { return fwd_[x]; }

  std::span<const uint32_t> table() const { return fwd_; }
  std::span<const uint32_t> inverse_table() const { return inv_; }

 private:
  Permutation(int n, std::vector<uint32_t> fwd, std::vector<uint32_t> inv);
  int n_;
  std::vector<uint32_t> fwd_, inv_;
};

// Transposition of a and b (identity when a == b).
Permutation make_swap(int n, uint64_t a, uint64_t b);

// compose(f, g)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);

Permutation invert(const Permutation& p);

// Plain function {0,1}^m -> {0,1}^n as a lookup table.
class FunctionTable {
 public:
  FunctionTable(int in_bits, int out_bits, std::vector<uint32_t> table);
  static FunctionTable sample(int in_bits, int out_bits, Rng& rng);

  int in_bits() const { return m_; }
  int out_bits() const { return n_; }
  uint64_t domain_size() const { return table_.size(); }
  uint64_t operator()(uint64_t x) const { return table_[x]; }
  std::span<const uint32_t> table() const { return table_; }
  std::vector<uint32_t>& mutable_table() { return table_; }

 private:
  int m_, n_;
  std::vector<uint32_t> table_;
};

// One line per table entry, lowercase hex, newline-terminated.
void write_hex_lines(std::ostream& os, std::span<const uint32_t> table);
std::vector<uint32_t> read_hex_lines(std::istream& is);

}  // namespace qemlab::perm
