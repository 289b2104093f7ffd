#include "genus1/poly.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace g1 {

Poly Poly::constant(const Scalar& a) {
  Poly p(a.field());
  if (!a.is_zero()) p.c_.push_back(a);
  return p;
}

Poly Poly::from_ints(const Field& f, const std::vector<long>& coeffs) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(f, v);
  return Poly(f, std::move(c));
}

Poly Poly::linear_minus(const Scalar& lambda) {
  const Field& f = lambda.field();
  return Poly(f, {-lambda, Scalar::one(f)});
}

Poly Poly::monomial(const Field& f, int n, const Scalar& coeff) {
  if (coeff.is_zero()) return zero(f);
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar::zero(f));
  c.back() = coeff;
  return Poly(f, std::move(c));
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(field_);
  return c_[static_cast<size_t>(i)];
}

Scalar Poly::leading() const {
  if (c_.empty()) fail("invalid-argument", "leading coefficient of zero polynomial");
  return c_.back();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar r = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) fail("field-mismatch", "polynomials over different fields");
  Poly r(a.field_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) fail("field-mismatch", "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
  Poly r(a.field_);
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

Poly Poly::operator*(const Scalar& s) const {
  Poly r = *this;
  for (auto& a : r.c_) a *= s;
  r.trim();
  return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail("division-by-zero", "polynomial division by zero");
  Poly q(a.field_), r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Scalar::zero(a.field_));
  Scalar lb_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Scalar f = r.leading() * lb_inv;
    q.c_[static_cast<size_t>(k)] = f;
    for (int i = 0; i <= b.degree(); ++i)
      r.c_[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

std::tuple<Poly, Poly, Poly> Poly::ext_gcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = constant(Scalar::one(f)), s1 = zero(f);
  Poly t0 = zero(f), t1 = constant(Scalar::one(f));
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly Poly::derivative() const {
  Poly r(field_);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::compose_power(int s) const {
  if (s < 1) fail("invalid-argument", "compose_power needs s >= 1");
  Poly r(field_);
  if (is_zero()) return r;
  r.c_.assign(static_cast<size_t>(degree()) * s + 1, Scalar::zero(field_));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(s)] = c_[i];
  r.trim();
  return r;
}

Poly Poly::reversed_monic() const {
  if (is_zero() || coeff(0).is_zero())
    fail("invalid-argument", "reversal transform needs a nonzero constant term");
  std::vector<Scalar> rc(c_.rbegin(), c_.rend());
  return Poly(field_, std::move(rc)).monic();
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = Scalar::compare(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& a = c_[static_cast<size_t>(i)];
    if (a.is_zero()) continue;
    std::string lit = a.field().is_rationals() ? a.str() : "(" + a.str() + ")";
    if (!first) {
      if (lit[0] == '-') {
        os << " - ";
        lit = lit.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (i == 0 || lit != "1") {
      os << lit;
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace g1
