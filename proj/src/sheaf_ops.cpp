#include "genus1/sheaf_ops.hpp"

#include <algorithm>
#include <numeric>

namespace g1 {

namespace {

int descriptor_order(const Descriptor& a, const Descriptor& b) {
  Charge ca = charge_of(a), cb = charge_of(b);
  if (ca.rank != cb.rank) return ca.rank < cb.rank ? -1 : 1;
  if (ca.degree != cb.degree) return ca.degree < cb.degree ? -1 : 1;
  bool ba = std::holds_alternative<BandDescriptor>(a);
  bool bb = std::holds_alternative<BandDescriptor>(b);
  if (ba != bb) return ba ? -1 : 1;
  if (ba) {
    const auto& x = std::get<BandDescriptor>(a);
    const auto& y = std::get<BandDescriptor>(b);
    if (x.d != y.d) return x.d < y.d ? -1 : 1;
    if (x.m != y.m) return x.m < y.m ? -1 : 1;
    return Poly::compare(x.p, y.p);
  }
  const auto& x = std::get<StringDescriptor>(a);
  const auto& y = std::get<StringDescriptor>(b);
  if (x.d != y.d) return x.d < y.d ? -1 : 1;
  return x.f == y.f ? 0 : (x.f < y.f ? -1 : 1);
}

void push_summand(DecompositionResult& r, Descriptor d, int mult) {
  for (auto& [existing, c] : r.summands) {
    if (descriptor_order(existing, d) == 0) {
      c += mult;
      return;
    }
  }
  r.summands.emplace_back(std::move(d), mult);
}

void sort_summands(DecompositionResult& r) {
  std::sort(r.summands.begin(), r.summands.end(),
            [](const auto& a, const auto& b) { return descriptor_order(a.first, b.first) < 0; });
}

std::vector<long> nilpotent_ranks(const Matrix& nil) {
  std::vector<long> r = {static_cast<long>(nil.rows())};
  Matrix power = Matrix::identity(nil.field(), nil.rows());
  while (r.back() > 0) {
    power = power * nil;
    r.push_back(power.rank());
  }
  r.push_back(0);
  return r;
}

}  // namespace

Charge DecompositionResult::total() const {
  Charge t{0, 0};
  for (const auto& [d, mult] : summands) {
    Charge c = charge_of(d);
    t.rank += c.rank * mult;
    t.degree += c.degree * mult;
  }
  return t;
}

Descriptor dual(const Descriptor& x) {
  if (std::holds_alternative<BandDescriptor>(x)) {
    const auto& b = std::get<BandDescriptor>(x);
    std::vector<int> nd;
    nd.reserve(b.d.size());
    for (int v : b.d) nd.push_back(-v);
    return canonical_band(BandDescriptor(b.n, std::move(nd), b.m, b.p.reversed_monic()));
  }
  const auto& s = std::get<StringDescriptor>(x);
  std::vector<int> kappa(s.d.size(), 0);
  if (s.d.size() == 1) {
    kappa[0] = -2;
  } else {
    kappa.front() = -1;
    kappa.back() = -1;
  }
  std::vector<int> nd(s.d.size());
  for (size_t i = 0; i < s.d.size(); ++i) nd[i] = kappa[i] - s.d[i];
  return StringDescriptor(s.n, std::move(nd), s.f, s.field());
}

DecompositionResult decompose_band_data(int n, const std::vector<int>& d, int m, const Poly& p) {
  DecompositionResult r;
  auto period = is_periodic(d, n);
  if (!period) {
    push_summand(r, canonical_band(BandDescriptor(n, d, m, p)), 1);
    return r;
  }
  // B(e^s, m, p): the wrapped module is k[t]/p(t^s)^m, split by CRT over the
  // irreducible factors of p(t^s)
  Poly ps = p.compose_power(period->repeats);
  for (const auto& [w, a] : factor(ps).factors)
    push_summand(r, canonical_band(BandDescriptor(n, period->base, a * m, w)), 1);
  sort_summands(r);
  return r;
}

std::vector<int> tensor_unipotent(int e, int f, const Field& field) {
  if (e < 1 || f < 1) fail("invalid-argument", "unipotent indices must be positive");
  if (e < f) std::swap(e, f);
  if (field.is_rationals()) {
    std::vector<int> h;
    for (int i = 0; i < f; ++i) h.push_back(e - f + 1 + 2 * i);
    return h;
  }
  // Jordan type of J_e(1) (x) J_f(1) at the eigenvalue 1
  Matrix je(field, e, e), jf(field, f, f);
  for (int i = 0; i < e; ++i) {
    je.at(i, i) = Scalar::one(field);
    if (i + 1 < e) je.at(i, i + 1) = Scalar::one(field);
  }
  for (int i = 0; i < f; ++i) {
    jf.at(i, i) = Scalar::one(field);
    if (i + 1 < f) jf.at(i, i + 1) = Scalar::one(field);
  }
  Matrix nil = Matrix::kronecker(je, jf) - Matrix::identity(field, e * f);
  std::vector<long> r = nilpotent_ranks(nil);
  std::vector<int> sizes;
  for (size_t j = 1; j + 1 < r.size(); ++j) {
    long exactly = r[j - 1] - 2 * r[j] + r[j + 1];  // blocks of size exactly j
    for (long c = 0; c < exactly; ++c) sizes.push_back(static_cast<int>(j));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

DecompositionResult tensor_bands(const BandDescriptor& a, const BandDescriptor& b) {
  if (a.field() != b.field()) fail("field-mismatch", "tensor of bands over different fields");
  if (a.n != 1 || b.n != 1)
    fail("unsupported", "the closed tensor formula is stated on the one-node cycle",
         "use the triple-level tensor for larger cycles");
  if (a.p.degree() != 1 || b.p.degree() != 1)
    fail("unsupported", "the closed tensor formula needs linear continuous parameters",
         "use the triple-level tensor for higher-degree parameters");
  const Field& field = a.field();
  if (field.characteristic() != 0 && (a.m > 1 || b.m > 1))
    fail("unsupported-reduction",
         "pulling the unipotent factor out of a tensor product is only valid in "
         "characteristic zero");
  long k = static_cast<long>(a.d.size()), l = static_cast<long>(b.d.size());
  long g = std::gcd(k, l), big = k / g * l;
  Scalar lambda = -a.p.coeff(0), mu = -b.p.coeff(0);
  Scalar param = lambda.pow(l / g) * mu.pow(k / g);
  DecompositionResult core;
  for (long i = 0; i < g; ++i) {
    std::vector<int> fi;
    fi.reserve(static_cast<size_t>(big));
    for (long j = 0; j < big; ++j)
      fi.push_back(a.d[static_cast<size_t>(j % k)] + b.d[static_cast<size_t>((i + j) % l)]);
    DecompositionResult part = decompose_band_data(1, fi, 1, Poly::linear_minus(param));
    for (auto& [desc, mult] : part.summands) push_summand(core, desc, mult);
  }
  // multiply the unipotent factors back in (trivial when both m = 1)
  DecompositionResult out;
  std::vector<int> hs = tensor_unipotent(a.m, b.m, Field::rationals());
  for (const auto& [desc, mult] : core.summands) {
    const auto& part = std::get<BandDescriptor>(desc);
    for (int h : hs) {
      std::vector<int> sizes = part.m == 1 ? std::vector<int>{h}
                               : h == 1    ? std::vector<int>{part.m}
                                           : tensor_unipotent(part.m, h, Field::rationals());
      for (int s : sizes)
        push_summand(out, canonical_band(BandDescriptor(part.n, part.d, s, part.p)), mult);
    }
  }
  sort_summands(out);
  Charge expect{a.charge().rank * b.charge().rank,
                a.charge().degree * b.charge().rank + b.charge().degree * a.charge().rank};
  if (!(out.total() == expect)) fail("internal", "tensor decomposition charge mismatch");
  return out;
}

DecompositionResult pullback_etale(const BandDescriptor& b, int r) {
  if (r < 1) fail("invalid-argument", "covering degree must be positive");
  if (b.m != 1 || b.p.degree() != 1)
    fail("unsupported", "etale pullback is implemented for multiplicity one and linear parameter");
  // The cyclic walk of the band winds laps() times around E_n; its lift to
  // E_nr breaks into gcd(r, laps) cycles, each winding r/g times and passing
  // the Frobenius crossing r/g times. (Reading the covering this way keeps
  // the per-component splitting of the pullback right, which the plain
  // concatenation d^r does not.)
  int n = b.n, rb = b.laps();
  long len = static_cast<long>(b.d.size());
  int g = std::gcd(r, rb);
  long lift_len = len * r / g;
  Scalar lambda = -b.p.coeff(0);
  Poly param = Poly::linear_minus(lambda.pow(r / g));
  DecompositionResult out;
  for (int j = 0; j < g; ++j) {
    // the lift starting at the j-th preimage component, re-anchored at
    // component zero of E_nr
    long start = (static_cast<long>(n) * r - static_cast<long>(j) * n) % (static_cast<long>(n) * r);
    std::vector<int> w;
    w.reserve(static_cast<size_t>(lift_len));
    for (long i = 0; i < lift_len; ++i)
      w.push_back(b.d[static_cast<size_t>((start + i) % len)]);
    DecompositionResult part = decompose_band_data(n * r, w, 1, param);
    for (auto& [desc, mult] : part.summands) push_summand(out, desc, mult);
  }
  sort_summands(out);
  Charge expect{b.charge().rank, b.charge().degree * r};
  if (!(out.total() == expect)) fail("internal", "pullback decomposition charge mismatch");
  return out;
}

BandDescriptor pushforward_line(int target_n, const std::vector<int>& d, const Poly& p, int m) {
  if (p.degree() != 1) fail("invalid-argument", "pushforward takes a line bundle parameter t - lambda");
  if (target_n < 1 || d.size() % static_cast<size_t>(target_n) != 0)
    fail("invalid-argument", "degree sequence length must be a multiple of the target cycle size");
  if (is_periodic(d, target_n)) {
    DecompositionResult split = decompose_band_data(target_n, d, m, p);
    std::string listing;
    for (const auto& [desc, mult] : split.summands) {
      const auto& part = std::get<BandDescriptor>(desc);
      if (!listing.empty()) listing += " + ";
      listing += std::to_string(mult) + " x B(d=[";
      for (size_t i = 0; i < part.d.size(); ++i)
        listing += (i ? "," : "") + std::to_string(part.d[i]);
      listing += "], m=" + std::to_string(part.m) + ", p=" + part.p.str() + ")";
    }
    fail("decomposable-pushforward", "periodic degree sequence: the direct image decomposes",
         listing);
  }
  return BandDescriptor(target_n, d, m, p);
}

Cohomology cohomology_formula(const BandDescriptor& b) {
  long len = static_cast<long>(b.d.size());
  long plus = 0;
  for (int v : b.d) plus += std::max(v + 1, 0);
  bool all_nonneg = std::all_of(b.d.begin(), b.d.end(), [](int v) { return v >= 0; });
  long theta = 0;
  if (all_nonneg) {
    theta = len;
  } else {
    // maximal cyclic runs of nonnegative entries
    for (size_t i = 0; i < b.d.size(); ++i) {
      if (b.d[i] < 0) continue;
      size_t prev = (i + b.d.size() - 1) % b.d.size();
      if (b.d[prev] >= 0) continue;  // not the start of a run
      long l = 0;
      bool zeros = true;
      for (size_t j = i; b.d[j % b.d.size()] >= 0; ++j) {
        zeros &= b.d[j % b.d.size()] == 0;
        ++l;
      }
      theta += zeros ? l : l + 1;
    }
  }
  long delta = 0;
  if (all_nonneg && b.p == Poly::linear_minus(Scalar::one(b.field()))) {
    bool all_zero = std::all_of(b.d.begin(), b.d.end(), [](int v) { return v == 0; });
    if (all_zero) delta = 1;
  }
  long k = b.p.degree();
  long h0 = k * b.m * (plus - theta) + delta;
  long h1 = h0 - b.charge().degree;
  if (h0 < 0 || h1 < 0) fail("internal", "cohomology formula out of range");
  return {h0, h1};
}

}  // namespace g1
