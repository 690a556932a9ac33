#pragma once

#include <cstdint>
#include <span>

namespace qemlab::games {

// Total-variation distance between the empirical distributions of two equal-
// duty samples of encoded outcomes: (1/2) sum_cell |freq_a - freq_b|.
double two_sample_tv(std::span<const uint64_t> sample_a, std::span<const uint64_t> sample_b);

// Expected value of two_sample_tv when both samples are drawn from the same
// distribution (normal approximation using the pooled cell frequencies). A
// measured TV within a small multiple of this baseline is consistent with the
// two ensembles being identically distributed.
double expected_null_tv(std::span<const uint64_t> sample_a, std::span<const uint64_t> sample_b);

// Pearson chi-square statistic of observed counts against expected counts
// (same length; every expected entry must be positive).
double chi_square_stat(std::span<const long> observed, std::span<const double> expected);

}  // namespace qemlab::games
