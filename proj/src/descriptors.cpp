#include "genus1/descriptors.hpp"

#include <algorithm>
#include <numeric>

namespace g1 {

CurveShape CurveShape::cycle(int n) {
  if (n < 1) fail("invalid-argument", "a cycle needs at least one component");
  return {Kind::cycle, n};
}

CurveShape CurveShape::chain(int k) {
  if (k < 1) fail("invalid-argument", "a chain needs at least one component");
  return {Kind::chain, k};
}

CurveShape CurveShape::cuspidal() { return {Kind::cuspidal_cubic, 1}; }

long euler_form(const Charge& a, const Charge& b) {
  return b.degree * a.rank - a.degree * b.rank;
}

std::optional<Period> is_periodic(const std::vector<int>& d, int n) {
  auto len = static_cast<int>(d.size());
  if (n < 1 || len % n != 0) fail("invalid-argument", "sequence length must be a multiple of n");
  int r = len / n;
  for (int s = r; s >= 2; --s) {
    if (r % s != 0) continue;
    int base_len = len / s;  // = (r/s) * n, always divisible by n
    bool ok = true;
    for (int i = base_len; i < len && ok; ++i)
      if (d[static_cast<size_t>(i)] != d[static_cast<size_t>(i - base_len)]) ok = false;
    if (ok) return Period{std::vector<int>(d.begin(), d.begin() + base_len), s};
  }
  return std::nullopt;
}

BandDescriptor::BandDescriptor(int n_, std::vector<int> d_, int m_, Poly p_)
    : n(n_), d(std::move(d_)), m(m_), p(std::move(p_)) {
  if (n < 1) fail("invalid-descriptor", "band needs a cycle with n >= 1");
  if (d.empty() || static_cast<int>(d.size()) % n != 0)
    fail("invalid-descriptor", "band degree sequence length must be a positive multiple of n");
  if (m < 1) fail("invalid-descriptor", "band multiplicity must be positive");
  if (p.degree() < 1) fail("invalid-descriptor", "band polynomial must have degree >= 1");
  if (!p.is_monic()) fail("invalid-descriptor", "band polynomial must be monic");
  if (p.coeff(0).is_zero()) fail("invalid-descriptor", "band polynomial must differ from t");
  if (!is_irreducible(p)) fail("invalid-descriptor", "band polynomial must be irreducible");
  if (is_periodic(d, n)) fail("invalid-descriptor", "band degree sequence must be non-periodic");
}

Charge BandDescriptor::charge() const {
  long k = p.degree();
  long sum = std::accumulate(d.begin(), d.end(), 0L);
  return {laps() * m * k, m * k * sum};
}

std::vector<int> BandDescriptor::component_multidegree(int i) const {
  if (i < 1 || i > n) fail("invalid-argument", "component index out of range");
  std::vector<int> out;
  long mk = static_cast<long>(m) * p.degree();
  for (int lap = 0; lap < laps(); ++lap) {
    int v = d[static_cast<size_t>(i - 1 + lap * n)];
    for (long c = 0; c < mk; ++c) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StringDescriptor::StringDescriptor(int n_, std::vector<int> d_, int f_, const Field& field)
    : n(n_), d(std::move(d_)), f(f_), field_(field) {
  if (n < 1) fail("invalid-descriptor", "string needs a cycle with n >= 1");
  if (d.empty()) fail("invalid-descriptor", "string degree sequence must be nonempty");
  if (f < 1 || f > n) fail("invalid-descriptor", "string start component out of range");
}

Charge StringDescriptor::charge() const {
  long sum = std::accumulate(d.begin(), d.end(), 0L);
  return {static_cast<long>(d.size()), sum + 1};
}

std::vector<long> StringDescriptor::component_ranks() const {
  std::vector<long> r(static_cast<size_t>(n), 0);
  for (size_t j = 0; j < d.size(); ++j) r[static_cast<size_t>((f - 1 + j) % n)] += 1;
  return r;
}

std::vector<int> StringDescriptor::component_multidegree(int i) const {
  if (i < 1 || i > n) fail("invalid-argument", "component index out of range");
  std::vector<int> out;
  for (size_t j = 0; j < d.size(); ++j)
    if (static_cast<int>((f - 1 + j) % n) == i - 1) out.push_back(d[j]);
  std::sort(out.begin(), out.end());
  return out;
}

Charge charge_of(const Descriptor& x) {
  return std::visit([](const auto& v) { return v.charge(); }, x);
}

const Field& field_of(const Descriptor& x) {
  return std::visit([](const auto& v) -> const Field& { return v.field(); }, x);
}

BandDescriptor canonical_band(const BandDescriptor& b) {
  int r = b.laps();
  std::vector<int> best = b.d;
  for (int j = 1; j < r; ++j) {
    std::vector<int> rot(b.d.size());
    for (size_t i = 0; i < b.d.size(); ++i)
      rot[i] = b.d[(i + static_cast<size_t>(j) * b.n) % b.d.size()];
    if (rot < best) best = rot;
  }
  return BandDescriptor(b.n, std::move(best), b.m, b.p);
}

BandDescriptor unipotent_band(const Field& f, int n, int m) {
  return BandDescriptor(n, std::vector<int>(static_cast<size_t>(n), 0), m,
                        Poly::linear_minus(Scalar::one(f)));
}

}  // namespace g1
