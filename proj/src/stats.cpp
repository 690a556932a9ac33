#include "qemlab/games/stats.hpp"

#include <cmath>
#include <unordered_map>

#include "qemlab/common.hpp"

namespace qemlab::games {

double two_sample_tv(std::span<const uint64_t> sample_a, std::span<const uint64_t> sample_b) {
  require(!sample_a.empty() && !sample_b.empty(), "tv: empty sample");
  std::unordered_map<uint64_t, std::pair<long, long>> counts;
  for (uint64_t v : sample_a) counts[v].first++;
  for (uint64_t v : sample_b) counts[v].second++;
  const double na = static_cast<double>(sample_a.size());
  const double nb = static_cast<double>(sample_b.size());
  double sum = 0.0;
  for (const auto& [cell, c] : counts) {
    sum += std::fabs(static_cast<double>(c.first) / na - static_cast<double>(c.second) / nb);
  }
  return 0.5 * sum;
}

double expected_null_tv(std::span<const uint64_t> sample_a, std::span<const uint64_t> sample_b) {
  require(!sample_a.empty() && !sample_b.empty(), "tv: empty sample");
  std::unordered_map<uint64_t, long> pooled;
  for (uint64_t v : sample_a) pooled[v]++;
  for (uint64_t v : sample_b) pooled[v]++;
  const double na = static_cast<double>(sample_a.size());
  const double nb = static_cast<double>(sample_b.size());
  const double total = na + nb;
  // E|p_hat_a - p_hat_b| per cell under a shared distribution: the difference
  // is approximately centered normal with variance p(1-p)(1/na + 1/nb), and
  // E|N(0, s^2)| = s * sqrt(2/pi).
  const double half_mean_abs = 0.5 * std::sqrt(2.0 / 3.14159265358979323846);
  double sum = 0.0;
  for (const auto& [cell, c] : pooled) {
    const double p = static_cast<double>(c) / total;
    sum += std::sqrt(p * (1.0 - p) * (1.0 / na + 1.0 / nb));
  }
  return half_mean_abs * sum;
}

double chi_square_stat(std::span<const long> observed, std::span<const double> expected) {
  require(observed.size() == expected.size() && !observed.empty(),
          "chi-square: size mismatch or empty");
  double stat = 0.0;
  for (size_t i = 0; i < observed.size(); ++i) {
    require(expected[i] > 0.0, "chi-square: nonpositive expected count");
    const double d = static_cast<double>(observed[i]) - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

}  // namespace qemlab::games
