#include "qemlab/layout.hpp"

namespace qemlab::sim {

RegisterLayout::RegisterLayout(std::vector<RegisterSpec> regs) : regs_(std::move(regs)) {
  require(!regs_.empty(), "layout: at least one register required");
  total_ = 0;
  for (const auto& r : regs_) {
    require(!r.name.empty(), "layout: register name must be non-empty");
    require(r.width >= 1, "layout: register width must be >= 1");
    for (const auto& other : regs_)
      require(&other == &r || other.name != r.name,
              "layout: duplicate register name '" + r.name + "'");
    total_ += r.width;
  }
  require(total_ <= max_qubits(),
          "layout: " + std::to_string(total_) + " qubits exceeds cap of " +
              std::to_string(max_qubits()));
  // Register 0 is most significant: its shift is the width of everything after it.
  shifts_.resize(regs_.size());
  int below = total_;
  for (size_t i = 0; i < regs_.size(); ++i) {
    below -= regs_[i].width;
    shifts_[i] = below;
  }
}

int RegisterLayout::index_of(std::string_view name) const {
  for (size_t i = 0; i < regs_.size(); ++i)
    if (regs_[i].name == name) return static_cast<int>(i);
  throw ConfigError("layout: unknown register '" + std::string(name) + "'");
}

}  // namespace qemlab::sim
