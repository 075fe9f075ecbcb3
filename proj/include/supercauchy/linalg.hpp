#pragma once

#include <gmpxx.h>

#include <vector>

namespace supercauchy {

// dense rational matrix, just enough for exact kernel computations
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  mpq_class& at(int r, int c) { return a_[r * cols_ + c]; }
  const mpq_class& at(int r, int c) const { return a_[r * cols_ + c]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // reduced row echelon form in place; returns pivot column indices
  std::vector<int> rref();

  // basis of the right nullspace, each vector of length cols()
  std::vector<std::vector<mpq_class>> nullspace() const;

  int rank() const;

 private:
  int rows_, cols_;
  std::vector<mpq_class> a_;
};

}  // namespace supercauchy
