#pragma once

#include <cstdint>
#include <vector>

#include "qemlab/common.hpp"
#include "qemlab/reprogram.hpp"

namespace qemlab::games {

enum class Direction { forward, inverse };

struct BadFlags {
  bool bad1 = false;  // programmed classical answer collides with an earlier one
  bool bad2 = false;  // hidden swap partner collides with an earlier classical input
  bool bad3 = false;  // a later classical query lands on the hidden swap partner
  bool any() const { return bad1 || bad2 || bad3; }
  bool operator==(const BadFlags&) const = default;
};

// Record of one game execution. Stage s is the period after the s-th
// classical query, so there are (classical queries + 1) stages and
// stage_quantum[s] counts the quantum oracle uses made during stage s.
struct GameTranscript {
  std::vector<perm::Transcript::Entry> classical;
  std::vector<long> stage_quantum = {0};
  long total_quantum = 0;
  int guess = 0;
  BadFlags flags;

  // stage count = classical queries + 1 and per-stage counts sum to the total.
  bool consistent() const {
    if (stage_quantum.size() != classical.size() + 1) return false;
    long sum = 0;
    for (long c : stage_quantum) sum += c;
    return sum == total_quantum;
  }
};

}  // namespace qemlab::games
