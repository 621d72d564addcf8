#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dialg/field.hpp"

namespace dialg {

class Subspace;

/// Dense exact matrix, row-major. Columns are images of basis vectors when
/// the matrix represents a linear map (M * v).
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldSpec field, std::size_t n);
  /// Throws UsageError on ragged input. `cols` is needed when `rows` is empty.
  static Matrix from_rows(FieldSpec field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(FieldSpec field, const std::vector<Vector>& cols, std::size_t rows);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_vectors() const;

  bool is_zero() const;
  Matrix transpose() const;
  Matrix power(std::size_t k) const;
  Vector apply(const Vector& v) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  friend Matrix operator*(const Scalar& s, const Matrix& m);

  /// Rows of `bottom` appended under this matrix.
  Matrix stacked(const Matrix& bottom) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form (pivots 1, zeros above and below).
RrefResult rref(const Matrix& m);

/// nullopt when m is singular or not square.
std::optional<Matrix> inverse(const Matrix& m);

/// {v : m v = 0}, canonical; dimension cols - rank.
Subspace kernel(const Matrix& m);

/// Smallest k with m^k = 0, or nullopt when m is not nilpotent. Only powers up
/// to n are examined: a nilpotent n x n matrix always has m^n = 0.
std::optional<std::size_t> nilpotency_index(const Matrix& m);

}  // namespace dialg
