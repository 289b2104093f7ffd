#include "genus1/laurent.hpp"

#include <sstream>

namespace g1 {

LaurentPoly LaurentPoly::monomial(const Field& f, int e, const Scalar& c) {
  LaurentPoly p(f);
  if (!c.is_zero()) p.c_[e] = c;
  return p;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p, int shift) {
  LaurentPoly r(p.field());
  for (int i = 0; i <= p.degree(); ++i) {
    Scalar c = p.coeff(i);
    if (!c.is_zero()) r.c_[i + shift] = c;
  }
  return r;
}

int LaurentPoly::val() const {
  if (c_.empty()) fail("invalid-argument", "valuation of zero Laurent polynomial");
  return c_.begin()->first;
}

int LaurentPoly::top() const {
  if (c_.empty()) fail("invalid-argument", "top exponent of zero Laurent polynomial");
  return c_.rbegin()->first;
}

Scalar LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Scalar::zero(field_) : it->second;
}

void LaurentPoly::set(int e, const Scalar& v) {
  if (v.is_zero())
    c_.erase(e);
  else
    c_[e] = v;
}

bool LaurentPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.c_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.field_);
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Scalar& s) const {
  LaurentPoly r(field_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : c_) r.c_[e] = c * s;
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r(field_);
  for (const auto& [ee, c] : c_) r.c_[ee + e] = c;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

Poly LaurentPoly::to_poly(int v) const {
  std::vector<Scalar> coeffs;
  if (c_.empty()) return Poly(field_);
  if (val() < v) fail("invalid-argument", "Laurent polynomial has exponents below " + std::to_string(v));
  coeffs.assign(static_cast<size_t>(top() - v) + 1, Scalar::zero(field_));
  for (const auto& [e, c] : c_) coeffs[static_cast<size_t>(e - v)] = c;
  return Poly(field_, std::move(coeffs));
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (it->first != 0) os << "*z^" << it->first;
  }
  return os.str();
}

LaurentMatrix LaurentMatrix::identity(const Field& f, int n) {
  LaurentMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::monomial(f, 0, Scalar::one(f));
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) fail("invalid-argument", "Laurent matrix product shape mismatch");
  LaurentMatrix r(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

LaurentPoly LaurentMatrix::det() const {
  if (rows_ != cols_) fail("invalid-argument", "determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return LaurentPoly::monomial(field_, 0, Scalar::one(field_));
  // clear z powers so entries become ordinary polynomials
  int shift = 0;
  for (const auto& p : e_)
    if (!p.is_zero()) shift = std::min(shift, p.val());
  std::vector<Poly> a;
  a.reserve(e_.size());
  for (const auto& p : e_) a.push_back(p.shifted(-shift).to_poly());

  auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
  Poly prev = Poly::constant(Scalar::one(field_));
  bool neg = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a[idx(k, k)].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[idx(i, k)].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return LaurentPoly(field_);
      for (int j = 0; j < n; ++j) std::swap(a[idx(k, j)], a[idx(p, j)]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Poly num = a[idx(i, j)] * a[idx(k, k)] - a[idx(i, k)] * a[idx(k, j)];
        auto [q, r] = Poly::divmod(num, prev);
        if (!r.is_zero()) fail("internal", "Bareiss division not exact");
        a[idx(i, j)] = q;
      }
    prev = a[idx(k, k)];
  }
  Poly d = a[idx(n - 1, n - 1)];
  if (neg) d = -d;
  return LaurentPoly::from_poly(d, shift * n);
}

std::string LaurentMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

}  // namespace g1
