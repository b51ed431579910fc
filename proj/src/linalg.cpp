#include "pcoh/linalg.hpp"

#include <utility>

#include "pcoh/errors.hpp"

namespace pcoh {

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw InternalError("matrix/vector size mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
  return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  return m;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InternalError("hconcat row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

namespace {

void swap_rows(Matrix& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

// Nonzero columns of row r at or after column `from`.
std::vector<std::size_t> support(const Matrix& m, std::size_t r, std::size_t from) {
  std::vector<std::size_t> s;
  for (std::size_t c = from; c < m.cols(); ++c)
    if (sgn(m(r, c)) != 0) s.push_back(c);
  return s;
}

}  // namespace

RowReduction::RowReduction(Matrix a) : reduced_(std::move(a)) {
  Matrix& m = reduced_;
  std::size_t row = 0;
  Rational tmp;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      swap_rows(m, p, row);
      ops_.push_back({Op::Swap, row, p, 0});
    }
    if (m(row, col) != 1) {
      Rational inv = 1 / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0) m(row, c) *= inv;
      ops_.push_back({Op::Scale, row, row, inv});
    }
    auto nz = support(m, row, col);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c : nz) {
        tmp = factor * m(row, c);
        m(r, c) -= tmp;
      }
      ops_.push_back({Op::AddMul, r, row, -factor});
    }
    pivots_.push_back(col);
    ++row;
  }
}

std::optional<Vector> RowReduction::solve(const Vector& rhs) const {
  if (rhs.size() != reduced_.rows()) throw InternalError("rhs size mismatch");
  Vector b = rhs;
  for (const Op& op : ops_) {
    switch (op.kind) {
      case Op::Swap: std::swap(b[op.target], b[op.source]); break;
      case Op::Scale: b[op.target] *= op.factor; break;
      case Op::AddMul:
        if (sgn(b[op.source]) != 0) b[op.target] += op.factor * b[op.source];
        break;
    }
  }
  for (std::size_t r = rank(); r < b.size(); ++r)
    if (sgn(b[r]) != 0) return std::nullopt;
  Vector x(reduced_.cols());
  for (std::size_t i = 0; i < rank(); ++i) x[pivots_[i]] = b[i];
  return x;
}

std::vector<Vector> RowReduction::nullspace() const {
  std::vector<bool> is_pivot(reduced_.cols(), false);
  for (std::size_t c : pivots_) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < reduced_.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(reduced_.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < rank(); ++i) v[pivots_[i]] = -reduced_(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear_exact(const Matrix& a, const std::optional<Vector>& rhs) {
  RowReduction rr(a);
  LinearSolution s;
  s.rank = rr.rank();
  s.nullspace = rr.nullspace();
  if (rhs) {
    s.particular = rr.solve(*rhs);
    s.consistent = s.particular.has_value();
  }
  return s;
}

std::size_t rank(Matrix m) {
  std::size_t row = 0;
  Rational factor, tmp;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) swap_rows(m, p, row);
    auto nz = support(m, row, col + 1);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (sgn(m(r, col)) == 0) continue;
      factor = m(r, col) / m(row, col);
      for (std::size_t c : nz) {
        tmp = factor * m(row, c);
        m(r, c) -= tmp;
      }
      m(r, col) = 0;
    }
    ++row;
  }
  return row;
}

}  // namespace pcoh
