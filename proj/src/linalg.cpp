#include "supercauchy/linalg.hpp"

#include <algorithm>

namespace supercauchy {

std::vector<int> RationalMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int r = row; r < rows_; ++r)
      if (at(r, col) != 0) { p = r; break; }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
    const mpq_class inv = 1 / at(row, col);
    for (int c = col; c < cols_; ++c) at(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const mpq_class f = at(r, col);
      for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<mpq_class>> RationalMatrix::nullspace() const {
  RationalMatrix work = *this;
  const std::vector<int> pivots = work.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<mpq_class>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols_);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at((int)r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int RationalMatrix::rank() const {
  RationalMatrix work = *this;
  return (int)work.rref().size();
}

}  // namespace supercauchy
