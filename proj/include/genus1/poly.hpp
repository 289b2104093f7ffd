#ifndef GENUS1_POLY_HPP
#define GENUS1_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "genus1/field.hpp"

namespace g1 {

/// Dense univariate polynomial over a Field, coefficients indexed by degree.
/// The top coefficient is nonzero unless the polynomial is zero (empty).
class Poly {
 public:
  explicit Poly(const Field& f) : field_(f) {}
  Poly(const Field& f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }
  static Poly zero(const Field& f) { return Poly(f); }
  static Poly constant(const Scalar& a);
  static Poly from_ints(const Field& f, const std::vector<long>& coeffs);
  /// t - lambda
  static Poly linear_minus(const Scalar& lambda);
  /// t^n with optional coefficient
  static Poly monomial(const Field& f, int n, const Scalar& coeff);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  Scalar leading() const;
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Scalar operator()(const Scalar& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Scalar& s) const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd.
  static Poly gcd(Poly a, Poly b);
  /// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
  static std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b);

  Poly derivative() const;
  Poly monic() const;
  /// a(t) -> a(t^s)
  Poly compose_power(int s) const;
  /// Reversal transform q(t) = t^deg * a(1/t) normalized monic; needs a(0) != 0.
  Poly reversed_monic() const;

  /// Total order for canonical forms: by degree, then coefficients from the top.
  static int compare(const Poly& a, const Poly& b);

  std::string str(const std::string& var = "t") const;

  void trim();

 private:
  Field field_;
  std::vector<Scalar> c_;
};

/// Irreducibility over the declared base field; degree >= 1 required.
bool is_irreducible(const Poly& f);

/// Factorization into monic irreducible factors with multiplicities, plus the
/// leading coefficient. Over Q the supported degree is capped at 16.
struct Factorization {
  Scalar leading;
  std::vector<std::pair<Poly, int>> factors;  // sorted canonically
};
Factorization factor(const Poly& f);

}  // namespace g1

#endif
