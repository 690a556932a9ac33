#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qemlab/cipher.hpp"
#include "qemlab/permutation.hpp"

namespace qemlab::perm {

// Ordered list of classical query/response pairs (x_i, y_i). Inputs are always
// distinct (queries are non-redundant). Outputs are distinct when the oracle is
// a permutation; function-valued oracles may repeat outputs, so distinctness of
// y is enforced only by append(), not by append_any_y().
class Transcript {
 public:
  struct Entry {
    uint64_t x;
    uint64_t y;
    bool operator==(const Entry&) const = default;
  };

  // Enforces distinct x and distinct y.
  void append(uint64_t x, uint64_t y);
  // Enforces distinct x only.
  void append_any_y(uint64_t x, uint64_t y);

  bool contains_x(uint64_t x) const;
  bool contains_y(uint64_t y) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entry& operator[](size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

  // First t entries as a new transcript.
  Transcript prefix(size_t t) const;

  bool operator==(const Transcript&) const = default;

 private:
  std::vector<Entry> entries_;
};

// Set of (input, output) reprogramming targets; each input appears at most once.
class ReprogramSet {
 public:
  void insert(uint64_t input, uint64_t output);
  size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<uint64_t, uint64_t>>& pairs() const { return pairs_; }

 private:
  std::vector<std::pair<uint64_t, uint64_t>> pairs_;
};

// Programmed permutation: chain of transpositions applied after P, one per
// transcript entry, pairing P(x_i ^ k1) with y_i ^ k2. The entry added last is
// applied first; an empty transcript returns P itself. The result agrees with
// the transcript under the keyed cipher unless distinct entries collide
// internally (P(x_i ^ k1) == y_j ^ k2 for i != j).
Permutation perm_reprogram(const Permutation& p, const Transcript& t, const Key& k);

// Function with every (input, output) pair of the set overwritten.
FunctionTable fn_reprogram_set(const FunctionTable& f, const ReprogramSet& b);

// Function with the single point s overwritten to y.
FunctionTable fn_reprogram_point(const FunctionTable& f, uint64_t s, uint64_t y);

// Forward-only programmed function: x -> y_i whenever x ^ k matches some x_i
// of the transcript, F(x) elsewhere. Transcript y values need not be distinct.
FunctionTable fwd_only_reprogram(const FunctionTable& f, const Transcript& t, uint64_t k);

}  // namespace qemlab::perm
