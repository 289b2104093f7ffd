#include "genus1/field.hpp"

#include <algorithm>
#include <cctype>

namespace g1 {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((u128(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid over signed 128-bit intermediates
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail("not-invertible", "element has no inverse mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
    if (n % s == 0) return n == s;
  }
  // deterministic Miller-Rabin for n < 3.3 * 10^24 with these bases
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 61)) fail("invalid-argument", "prime field modulus must be < 2^61");
  if (!is_prime_u64(p)) fail("invalid-argument", "field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& name) {
  if (name == "q" || name == "Q") return rationals();
  if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
    std::uint64_t p = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        fail("invalid-argument", "bad field name: " + name);
      p = p * 10 + static_cast<std::uint64_t>(name[i] - '0');
    }
    return prime(p);
  }
  fail("invalid-argument", "bad field name: " + name + " (expected q or f<p>)");
}

Scalar::Scalar(const Field& f, const mpq_class& q) : field_(f) {
  if (f.is_rationals()) {
    mpq_class c = q;
    c.canonicalize();
    v_ = c;
  } else {
    std::uint64_t p = f.characteristic();
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(std::to_string(p));
    mpz_class nr = num % pz, dr = den % pz;
    if (nr < 0) nr += pz;
    if (dr < 0) dr += pz;
    std::uint64_t n = nr.get_ui(), d = dr.get_ui();
    if (d == 0) fail("invalid-argument", "denominator divisible by field characteristic");
    v_ = mulmod(n, invmod(d, p), p);
  }
}

void Scalar::init_int(long n) {
  if (field_.is_rationals()) {
    v_ = mpq_class(n);
  } else {
    std::uint64_t p = field_.characteristic();
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    v_ = static_cast<std::uint64_t>(r);
  }
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  std::string s = text;
  auto pos = s.find(" mod ");
  if (pos != std::string::npos) {
    std::string mod = s.substr(pos + 5);
    if (!f.is_prime_field() || mod != std::to_string(f.characteristic()))
      fail("invalid-argument", "scalar '" + text + "' does not belong to field " + f.name());
    s = s.substr(0, pos);
  }
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
          s.end());
  if (s.empty()) fail("invalid-argument", "empty scalar literal");
  try {
    mpq_class q(s);
    q.canonicalize();
    return Scalar(f, q);
  } catch (const std::invalid_argument&) {
    fail("invalid-argument", "cannot parse scalar literal '" + text + "'");
  }
}

bool Scalar::is_zero() const {
  if (field_.is_rationals()) return std::get<mpq_class>(v_) == 0;
  return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rationals()) return std::get<mpq_class>(v_) == 1;
  return std::get<std::uint64_t>(v_) == 1 % field_.characteristic();
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) fail("field-mismatch", "scalars from different base fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rationals()) {
    std::get<mpq_class>(r.v_) = -std::get<mpq_class>(v_);
  } else {
    std::uint64_t a = std::get<std::uint64_t>(v_);
    std::get<std::uint64_t>(r.v_) = a == 0 ? 0 : field_.characteristic() - a;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rationals()) {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  } else {
    std::uint64_t p = field_.characteristic();
    std::uint64_t a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
    std::uint64_t s = a + b;  // p < 2^61: no overflow
    v_ = s >= p ? s - p : s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rationals()) {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  } else {
    v_ = mulmod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) fail("division-by-zero", "inverse of zero");
  Scalar r = *this;
  if (field_.is_rationals()) {
    std::get<mpq_class>(r.v_) = 1 / std::get<mpq_class>(v_);
  } else {
    std::get<std::uint64_t>(r.v_) = invmod(std::get<std::uint64_t>(v_), field_.characteristic());
  }
  return r;
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Scalar r = Scalar::one(field_);
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.is_rationals()) return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
  return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_rationals()) {
    int c = cmp(std::get<mpq_class>(a.v_), std::get<mpq_class>(b.v_));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  std::uint64_t x = std::get<std::uint64_t>(a.v_), y = std::get<std::uint64_t>(b.v_);
  return x < y ? -1 : (x > y ? 1 : 0);
}

std::string Scalar::str() const {
  if (field_.is_rationals()) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::uint64_t>(v_)) + " mod " + std::to_string(field_.characteristic());
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime_field()) fail("invalid-argument", "residue() needs a prime field scalar");
  return std::get<std::uint64_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) fail("invalid-argument", "rational() needs a rational scalar");
  return std::get<mpq_class>(v_);
}

}  // namespace g1
