#pragma once

#include <cstddef>
#include <vector>

#include "hilbeq/field.hpp"

namespace hilbeq {

/// Dense row-major matrix over an exact field. Shape is fixed at construction.
class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<std::vector<long>>& rows);
  static Matrix from_rows(const Field& field, const std::vector<std::vector<Scalar>>& rows);
  /// Vertical concatenation; all blocks must share the column count.
  static Matrix vstack(const std::vector<Matrix>& blocks);
  /// Horizontal concatenation; all blocks must share the row count.
  static Matrix hstack(const std::vector<Matrix>& blocks);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> column(std::size_t c) const;
  Matrix scaled(const Scalar& s) const;

  void swap_rows(std::size_t a, std::size_t b);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Matrix-vector product.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination; the pivot of each column is the first nonzero
/// entry at or below the current row.
Echelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Right kernel. Columns of the result are the rows of the reduced echelon
/// form of the kernel, so the first nonzero entry of every column is 1.
Matrix kernel_basis(const Matrix& m);

/// Nonzero rows of the reduced echelon form (a canonical row-space basis).
Matrix row_space_basis(const Matrix& m);

Scalar determinant(Matrix m);

/// Throws Error(SingularMatrix) when m is not invertible.
Matrix inverse(const Matrix& m);

}  // namespace hilbeq
