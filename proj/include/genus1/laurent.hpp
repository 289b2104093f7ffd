#ifndef GENUS1_LAURENT_HPP
#define GENUS1_LAURENT_HPP

#include <map>
#include <vector>

#include "genus1/poly.hpp"

namespace g1 {

/// Element of k[z, z^-1]: finitely many nonzero coefficients, any integer exponent.
class LaurentPoly {
 public:
  explicit LaurentPoly(const Field& f) : field_(f) {}
  static LaurentPoly monomial(const Field& f, int e, const Scalar& c);
  static LaurentPoly from_poly(const Poly& p, int shift = 0);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// Lowest exponent; nonzero input required.
  int val() const;
  /// Highest exponent; nonzero input required.
  int top() const;
  Scalar coeff(int e) const;
  void set(int e, const Scalar& v);
  const std::map<int, Scalar>& terms() const { return c_; }

  /// True iff exactly one term.
  bool is_monomial() const { return c_.size() == 1; }
  bool is_one() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator*(const Scalar& s) const;
  /// Multiply by z^e.
  LaurentPoly shifted(int e) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// this / z^v as an ordinary polynomial; fails if any exponent < v.
  Poly to_poly(int v = 0) const;

  std::string str() const;

 private:
  Field field_;
  std::map<int, Scalar> c_;
};

/// Square or rectangular matrix over k[z, z^-1].
class LaurentMatrix {
 public:
  LaurentMatrix(const Field& f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), LaurentPoly(f)) {}
  static LaurentMatrix identity(const Field& f, int n);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LaurentPoly& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const LaurentPoly& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

  /// Exact determinant (fraction-free Bareiss after clearing z powers).
  LaurentPoly det() const;

  std::string str() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<LaurentPoly> e_;
};

struct BirkhoffResult {
  LaurentMatrix S;             // invertible over k[z]
  LaurentMatrix T;             // invertible over k[z^-1]
  std::vector<int> exponents;  // d_1 <= ... <= d_r with T^-1 M S = diag(z^d_i)
};

/// Diagonalizes M in GL(r, k[z,z^-1]) as T^-1 M S = diag(z^d_i).
/// Fails with "not-invertible" if det(M) is not a unit c z^e.
BirkhoffResult birkhoff_factor(const LaurentMatrix& m);

/// Multidegree {-d_1, ..., -d_r} of the vector bundle on P^1 glued by M,
/// sorted ascending. The 1x1 matrix (z^d) glues O(-d).
std::vector<int> splitting_type(const LaurentMatrix& m);

}  // namespace g1

#endif
