#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

namespace qemlab::games {

// One row of experiment output. The field order below is the wire order; the
// CSV schema is exactly this struct plus the trailing `vacuous` marker for
// bound values that were clipped to 1.
struct ResultRow {
  std::string experiment;  // attack | lemma | hybrid | sweep | selftest
  std::string name;        // row label within the experiment
  int n = 0;               // oracle width in bits
  std::string variant;     // two-key | one-key | forward-only | "-" when n/a
  double q_e = 0;          // charged classical-cipher queries (may be a mean)
  double q_p = 0;          // charged public-oracle queries (may be a mean)
  long j = -1;             // hybrid cut index; -1 for non-hybrid rows
  long trials = 0;
  double p_world1 = 0;     // guess-1 rate (or success rate) in world 1
  double p_world0 = 0;     // guess-1 rate in world 0; 0 for single-world rows
  double advantage = 0;
  double ci_halfwidth = 0;
  double bound = 0;        // clipped to [0, 1]
  uint64_t seed = 0;
  long wall_time_ms = 0;
  bool vacuous = false;    // the unclipped bound was >= 1
};

// Shortest decimal representation that parses back to exactly the same
// double. Locale-independent: the decimal separator is always '.'.
// Non-finite values are rejected.
std::string format_double(double v);

// The fixed header line (no trailing newline).
std::string csv_header();

// One data line (no trailing newline). String fields must not contain commas,
// quotes, or line breaks; numeric fields must be finite.
std::string csv_line(const ResultRow& r);

// Header plus one line per row, every line LF-terminated.
void write_csv(std::ostream& os, std::span<const ResultRow> rows);

}  // namespace qemlab::games
