#include "qemlab/gf2.hpp"

namespace qemlab::attacks {

Gf2Solver::Gf2Solver(int width) : width_(width) {
  require(width >= 1 && width <= 63, "Gf2Solver: width must be in [1, 63]");
}

bool Gf2Solver::add_row(uint64_t row) {
  require(row <= bit_mask(width_), "Gf2Solver: row exceeds width");
  for (size_t i = 0; i < pivots_.size(); ++i)
    if (row >> pivots_[i] & 1) row ^= pivot_rows_[i];
  if (row == 0) return false;
  int lead = width_ - 1;
  while (!(row >> lead & 1)) --lead;
  // Back-substitute into existing pivot rows to keep the basis reduced.
  for (size_t i = 0; i < pivots_.size(); ++i)
    if (pivot_rows_[i] >> lead & 1) pivot_rows_[i] ^= row;
  pivot_rows_.push_back(row);
  pivots_.push_back(lead);
  return true;
}

std::vector<uint64_t> Gf2Solver::nullspace_basis() const {
  std::vector<char> is_pivot(static_cast<size_t>(width_), 0);
  for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = 1;
  std::vector<uint64_t> basis;
  for (int free_col = 0; free_col < width_; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    // Solution with this free variable set to one: satisfy each pivot row.
    uint64_t v = uint64_t{1} << free_col;
    for (size_t i = 0; i < pivots_.size(); ++i)
      if (pivot_rows_[i] >> free_col & 1) v |= uint64_t{1} << pivots_[i];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace qemlab::attacks
