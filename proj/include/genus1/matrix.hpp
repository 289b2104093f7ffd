#ifndef GENUS1_MATRIX_HPP
#define GENUS1_MATRIX_HPP

#include <vector>

#include "genus1/field.hpp"

namespace g1 {

/// Dense matrix over the base field. Exact Gaussian elimination only.
class Matrix {
 public:
  Matrix(const Field& f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar::zero(f)) {}
  static Matrix identity(const Field& f, int n);
  static Matrix zero(const Field& f, int rows, int cols) { return Matrix(f, rows, cols); }

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  Matrix operator*(const Scalar& s) const;

  int rank() const;
  Scalar det() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  /// Basis of the right nullspace, one column vector per basis element.
  std::vector<std::vector<Scalar>> nullspace() const;

  Matrix transpose() const;
  static Matrix kronecker(const Matrix& a, const Matrix& b);
  /// [a 0; 0 b]
  static Matrix direct_sum(const Matrix& a, const Matrix& b);
  /// Stacks a on top of b (equal column counts).
  static Matrix vstack(const Matrix& a, const Matrix& b);

  Matrix submatrix(int r0, int c0, int nrows, int ncols) const;
  void paste(int r0, int c0, const Matrix& block);

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace g1

#endif
