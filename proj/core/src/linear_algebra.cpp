#include "gincs/linear_algebra.hpp"

#include <stdexcept>

namespace gincs {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not match");
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Coeff aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return c;
}

std::vector<int> row_reduce(const PrimeField& f, Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    const Coeff scale = f.inv(m.at(row, col));
    for (int c = col; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), scale);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      const Coeff factor = m.at(r, col);
      if (factor == 0) continue;
      for (int c = col; c < m.cols; ++c) m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const PrimeField& f, Matrix m) { return static_cast<int>(row_reduce(f, m).size()); }

std::vector<std::vector<Coeff>> nullspace(const PrimeField& f, Matrix m) {
  const std::vector<int> pivots = row_reduce(f, m);
  std::vector<int> pivot_row(m.cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
  std::vector<std::vector<Coeff>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<Coeff> v(m.cols, 0);
    v[free] = 1;
    for (int c = 0; c < m.cols; ++c)
      if (pivot_row[c] >= 0) v[c] = f.neg(m.at(pivot_row[c], free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = m.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const std::vector<int> pivots = row_reduce(f, aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace gincs
