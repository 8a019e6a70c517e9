#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bohrkit/coefficient.hpp"

namespace bohrkit {

// Dense row-major matrix over the Gaussian rationals.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  CoefficientQ& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CoefficientQ& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CoefficientQ> data_;
};

struct Echelon {
  DenseMatrix matrix;  // row echelon form over Z[i]
  std::vector<std::size_t> pivots;
};

// Fraction-free (Bareiss) row echelon form. Rows are first scaled to
// Gaussian-integer entries; every elimination step divides exactly by the
// previous pivot.
Echelon fraction_free_echelon(DenseMatrix m);

// Basis of {x : A x = 0}, in reduced row echelon form (each vector's first
// nonzero coordinate is 1, and that coordinate is zero in all other vectors).
std::vector<std::vector<CoefficientQ>> kernel_basis(const DenseMatrix& a);

// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<CoefficientQ>> solve_linear(const DenseMatrix& a,
                                                      const std::vector<CoefficientQ>& b);

// In-place Gauss-Jordan to reduced row echelon form; drops zero rows.
void reduce_rows(std::vector<std::vector<CoefficientQ>>& rows);

}  // namespace bohrkit
