#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pcoh/poly.hpp"

namespace pcoh {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector apply(const Vector& x) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix select_cols(const std::vector<std::size_t>& cols) const;
  // Appends columns on the right.
  static Matrix hconcat(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form with the row operations logged, so right-hand
// sides can be reduced later without refactoring. Pivots: for each column in
// order, the first remaining row with a nonzero entry.
class RowReduction {
 public:
  explicit RowReduction(Matrix a);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return reduced_.cols(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  const Matrix& reduced() const { return reduced_; }

  // Particular solution with all free variables zero, or nullopt if A x = b is inconsistent.
  std::optional<Vector> solve(const Vector& rhs) const;
  std::vector<Vector> nullspace() const;

 private:
  struct Op {
    enum Kind { Swap, Scale, AddMul } kind;
    std::size_t target, source;
    Rational factor;
  };

  Matrix reduced_;
  std::vector<std::size_t> pivots_;
  std::vector<Op> ops_;
};

struct LinearSolution {
  std::size_t rank = 0;
  bool consistent = true;
  std::optional<Vector> particular;  // present iff rhs given and consistent
  std::vector<Vector> nullspace;
};

LinearSolution solve_linear_exact(const Matrix& a, const std::optional<Vector>& rhs = std::nullopt);

// Row echelon rank without logging.
std::size_t rank(Matrix a);

}  // namespace pcoh
