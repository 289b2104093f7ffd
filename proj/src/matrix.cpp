#include "genus1/matrix.hpp"

namespace g1 {

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || a.field_ != b.field_) fail("invalid-argument", "matrix product shape mismatch");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail("invalid-argument", "matrix sum shape mismatch");
  Matrix r = a;
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) += b.at(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail("invalid-argument", "matrix difference shape mismatch");
  Matrix r = a;
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) -= b.at(i, j);
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

namespace {

// row echelon in place; returns pivot columns
std::vector<int> echelon(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(echelon(m).size());
}

Scalar Matrix::det() const {
  if (rows_ != cols_) fail("invalid-argument", "determinant of non-square matrix");
  Matrix m = *this;
  Scalar d = Scalar::one(field_);
  for (int col = 0; col < cols_; ++col) {
    int p = -1;
    for (int i = col; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar::zero(field_);
    if (p != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Scalar inv = m.at(col, col).inverse();
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
  Matrix m = *this;
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(cols_), Scalar::zero(field_));
    v[static_cast<size_t>(free)] = Scalar::one(field_);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
  Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l)
          r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  r.paste(0, 0, a);
  r.paste(a.rows_, a.cols_, b);
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) fail("invalid-argument", "vstack column mismatch");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  r.paste(0, 0, a);
  r.paste(a.rows_, 0, b);
  return r;
}

Matrix Matrix::submatrix(int r0, int c0, int nrows, int ncols) const {
  Matrix r(field_, nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

void Matrix::paste(int r0, int c0, const Matrix& block) {
  for (int i = 0; i < block.rows_; ++i)
    for (int j = 0; j < block.cols_; ++j) at(r0 + i, c0 + j) = block.at(i, j);
}

}  // namespace g1
