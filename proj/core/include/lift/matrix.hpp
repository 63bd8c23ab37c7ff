#pragma once

#include <optional>
#include <vector>

#include "lift/ints.hpp"

namespace lift {

/// Dense matrix over arbitrary-precision integers.
///
/// Small and dense on purpose: every matrix in this library is a character
/// matrix, a ray matrix or a kernel basis, all of desk size.
class IntMat {
public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMat from_cols(const std::vector<std::vector<Int>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Int> row(std::size_t r) const;
  std::vector<Int> col(std::size_t c) const;

  IntMat transpose() const;
  IntMat operator*(const IntMat& other) const;
  bool operator==(const IntMat& other) const = default;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // M * v

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct SmithResult {
  IntMat u;  // unimodular, rows x rows
  IntMat s;  // diagonal, same shape as input, d_i | d_{i+1}, d_i >= 0
  IntMat v;  // unimodular, cols x cols
};

/// Smith normal form: u * m * v = s.
SmithResult smith_decompose(const IntMat& m);

/// Columns form a Z-basis of ker(m) over the integers. The basis is
/// saturated (it comes from unimodular column operations).
IntMat integer_kernel(const IntMat& m);

std::size_t rank(const IntMat& m);
Int det(const IntMat& m);  // square input
bool is_unimodular(const IntMat& m);

/// One integral solution of m*x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b);

/// Unique rational solution of m*x = b for square m with det != 0.
std::optional<std::vector<Rat>> solve_rational(const IntMat& m, const std::vector<Int>& b);

/// Generator of the one-dimensional kernel of a matrix of rank cols-1,
/// primitive and ambiguous up to sign.
std::optional<std::vector<Int>> kernel_line(const IntMat& m);

/// Exact inverse of a matrix with det +-1.
IntMat inverse_unimodular(const IntMat& m);

}  // namespace lift
