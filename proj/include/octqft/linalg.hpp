#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "octqft/field.hpp"

namespace octqft {

/// Dense exact matrix, row-major. Column j is the image of the j-th basis
/// vector of the domain.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix zero(FieldSpec f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
  static Matrix identity(FieldSpec f, std::size_t n);
  /// Builds from rows of integers; convenient for tests and catalogs.
  static Matrix from_ints(FieldSpec f, const std::vector<std::vector<long>>& rows);
  static Matrix from_columns(FieldSpec f, std::size_t rows, const std::vector<Vector>& cols);

  FieldSpec field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  void set_column(std::size_t j, const Vector& v);

  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product; the left factor indexes the most significant digit.
Matrix kron(const Matrix& a, const Matrix& b);

/// Matrix product with the outer loop over rows distributed over OpenMP
/// threads. Bit-identical to operator* (exact arithmetic, fixed per-entry
/// summation order).
Matrix multiply_parallel(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Pivots are chosen column by column, left to
/// right, taking the first nonzero entry at or below the current row.
RowEchelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One exact solution of m x = b (free variables zero), or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Throws Math/SingularMatrix when m is not invertible.
Matrix invert_matrix(const Matrix& m);

/// Basis of the null space, one vector per free column, in column order.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some left inverse L (L m = 1) of a matrix with full column rank.
Matrix left_inverse(const Matrix& m);

}  // namespace octqft
