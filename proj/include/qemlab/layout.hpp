#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qemlab/common.hpp"

namespace qemlab::sim {

struct RegisterSpec {
  std::string name;
  int width;
  bool operator==(const RegisterSpec&) const = default;
};

// Ordered list of named registers. Amplitudes of a state over this layout are
// indexed by the concatenated register values in declaration order with
// register 0 occupying the most significant bits.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<RegisterSpec> regs);

  int total_qubits() const { return total_; }
  int register_count() const { return static_cast<int>(regs_.size()); }
  const RegisterSpec& reg(int i) const { return regs_[static_cast<size_t>(i)]; }

  // Index of the named register; throws ConfigError for unknown names.
  int index_of(std::string_view name) const;

  // Bit position of the least significant bit of register i within a basis index.
  int shift_of(int i) const { return shifts_[static_cast<size_t>(i)]; }
  uint64_t mask_of(int i) const { return bit_mask(regs_[static_cast<size_t>(i)].width); }

  uint64_t extract(uint64_t basis_index, int i) const {
    return (basis_index >> shift_of(i)) & mask_of(i);
  }

  // Replace register i's bits inside basis_index with value (no other bits change).
  uint64_t insert(uint64_t basis_index, int i, uint64_t value) const {
    const int sh = shift_of(i);
    return (basis_index & ~(mask_of(i) << sh)) | (value << sh);
  }

  uint64_t dimension() const { return uint64_t{1} << total_; }

  bool operator==(const RegisterLayout&) const = default;

 private:
  std::vector<RegisterSpec> regs_;
  std::vector<int> shifts_;
  int total_ = 0;
};

}  // namespace qemlab::sim
