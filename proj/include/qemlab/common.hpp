#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qemlab {

// Thrown for violated preconditions: bad widths, non-bijective tables,
// budget overruns, malformed configs. The CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Hard ceiling on total qubits per state. QEMLAB_MAX_QUBITS overrides.
int max_qubits();

inline uint64_t bit_mask(int bits) {
  return bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ConfigError(msg);
}

}  // namespace qemlab
