#pragma once

#include <cstdint>

#include "qemlab/cipher.hpp"

namespace qemlab::attacks {

// Outcome of one key-recovery run. Failure is a result, not an exception.
struct AttackResult {
  bool success = false;
  perm::Key key{};             // meaningful only when success is set

  // Oracle invocations, split by access mode. Classical: basis-value queries
  // (one input, one output). Quantum: oracle evaluations performed inside
  // quantum programs; a phase-oracle application costs one count per oracle
  // evaluation its predicate needs.
  long classical_queries = 0;
  long quantum_queries = 0;

  int iterations = 0;          // quantum iterations executed (period-finding or amplification)
  int retries = 0;             // whole-cloth restarts after failed verification

  // Exhaustive-mode diagnostics (claw search): -1 when not computed.
  long marked_count = -1;      // inputs satisfying the search predicate
  long verifying_count = -1;   // marked inputs that yield a verified key
};

}  // namespace qemlab::attacks
