#include "qemlab/common.hpp"

#include <cstdlib>

namespace qemlab {

int max_qubits() {
  static const int cap = [] {
    if (const char* env = std::getenv("QEMLAB_MAX_QUBITS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1 && v <= 34) return static_cast<int>(v);
    }
    return 28;
  }();
  return cap;
}

}  // namespace qemlab
