#ifndef GENUS1_FIELD_HPP
#define GENUS1_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace g1 {

/// Error with a stable machine-readable code, surfaced through the C API
/// and the CLI as {code, message, context}.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}
  const std::string& code() const { return code_; }
  const std::string& context() const { return context_; }

 private:
  std::string code_;
  std::string context_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg,
                              const std::string& ctx = {}) {
  throw error(code, msg, ctx);
}

/// Base field: the rationals, or a prime field F_p with p < 2^61.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  /// 0 for Q, p for F_p.
  std::uint64_t characteristic() const { return p_; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

  std::string name() const { return p_ == 0 ? "q" : "f" + std::to_string(p_); }
  /// Parses "q" or "f<p>".
  static Field parse(const std::string& name);

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// Exact element of a declared base field. Value semantics throughout;
/// no floating point anywhere.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), v_(mpq_class(0)) {}
  Scalar(const Field& f, long n) : field_(f) { init_int(n); }
  Scalar(const Field& f, const mpq_class& q);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  /// Parses "3", "-3/4" or "2 mod 5" (the "mod p" part must match the field).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order used only for canonical forms and deterministic output.
  static int compare(const Scalar& a, const Scalar& b);

  std::string str() const;

  /// Residue in [0, p) for prime fields.
  std::uint64_t residue() const;
  const mpq_class& rational() const;

 private:
  void init_int(long n);
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> v_;
};

}  // namespace g1

#endif
