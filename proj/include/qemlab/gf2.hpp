#pragma once

#include <cstdint>
#include <vector>

#include "qemlab/common.hpp"

namespace qemlab::attacks {

// Row-echelon accumulator over GF(2); rows are bit vectors of fixed width.
// Supports incremental rank growth and nullspace extraction, which is all the
// period-finding post-processing needs.
class Gf2Solver {
 public:
  explicit Gf2Solver(int width);

  int width() const { return width_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  // Reduce the row against current pivots and absorb it; returns true when the
  // rank grew (row was independent).
  bool add_row(uint64_t row);

  // Basis of {v : M v = 0} for the accumulated row space M.
  std::vector<uint64_t> nullspace_basis() const;

 private:
  int width_;
  // pivot_rows_[i] has leading bit pivot_cols_[i]; kept fully reduced.
  std::vector<uint64_t> pivot_rows_;
  std::vector<int> pivots_;
};

}  // namespace qemlab::attacks
