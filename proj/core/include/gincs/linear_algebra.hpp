#pragma once

#include <optional>
#include <vector>

#include "gincs/field.hpp"

namespace gincs {

/// Row-major dense matrix over F_p.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Coeff> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  static Matrix identity(int n);

  Coeff& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  Coeff at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row.
std::vector<int> row_reduce(const PrimeField& f, Matrix& m);

int rank(const PrimeField& f, Matrix m);

/// Basis of { v : m * v = 0 }, one vector per free column.
std::vector<std::vector<Coeff>> nullspace(const PrimeField& f, Matrix m);

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& m);

}  // namespace gincs
