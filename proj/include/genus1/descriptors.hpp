#ifndef GENUS1_DESCRIPTORS_HPP
#define GENUS1_DESCRIPTORS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "genus1/poly.hpp"

namespace g1 {

struct CurveShape {
  enum class Kind { cycle, chain, cuspidal_cubic };
  Kind kind = Kind::cycle;
  int size = 1;  // components: n for a cycle, k for a chain

  static CurveShape cycle(int n);
  static CurveShape chain(int k);
  static CurveShape cuspidal();
  friend bool operator==(const CurveShape& a, const CurveShape& b) {
    return a.kind == b.kind && a.size == b.size;
  }
};

/// (rank, degree) of a sheaf; degree is normalized so that chi = degree.
struct Charge {
  long rank = 0;
  long degree = 0;
  friend bool operator==(const Charge& a, const Charge& b) {
    return a.rank == b.rank && a.degree == b.degree;
  }
  friend Charge operator+(const Charge& a, const Charge& b) {
    return {a.rank + b.rank, a.degree + b.degree};
  }
};

/// <a,b> = deg(b) rk(a) - deg(a) rk(b)
long euler_form(const Charge& a, const Charge& b);

/// Smallest period of d on a cycle of n lines: e with d = e^s and |e|
/// divisible by n, if one exists.
struct Period {
  std::vector<int> base;
  int repeats = 1;
};
std::optional<Period> is_periodic(const std::vector<int>& d, int n);

/// Indecomposable vector bundle B(d, m, p) on the cycle E_n: a non-periodic
/// degree sequence d of length r*n, a multiplicity m >= 1, and a monic
/// irreducible p with p(0) != 0 carrying the continuous parameter.
struct BandDescriptor {
  int n = 1;
  std::vector<int> d;
  int m = 1;
  Poly p;

  BandDescriptor(int n_, std::vector<int> d_, int m_, Poly p_);
  const Field& field() const { return p.field(); }
  int laps() const { return static_cast<int>(d.size()) / n; }

  Charge charge() const;
  /// Splitting degrees of the pullback to component i (1-based), with
  /// multiplicities m*deg(p), sorted ascending.
  std::vector<int> component_multidegree(int i) const;

  friend bool operator==(const BandDescriptor& a, const BandDescriptor& b) {
    return a.n == b.n && a.d == b.d && a.m == b.m && a.p == b.p;
  }
};

/// Torsion free, not locally free sheaf S(d, f) on E_n: the pushforward of a
/// line bundle from a chain of |d| lines whose first component maps to L_f.
struct StringDescriptor {
  int n = 1;
  std::vector<int> d;
  int f = 1;

  StringDescriptor(int n_, std::vector<int> d_, int f_, const Field& field);
  const Field& field() const { return field_; }

  Charge charge() const;
  std::vector<long> component_ranks() const;
  std::vector<int> component_multidegree(int i) const;

  friend bool operator==(const StringDescriptor& a, const StringDescriptor& b) {
    return a.n == b.n && a.d == b.d && a.f == b.f;
  }

 private:
  Field field_;
};

using Descriptor = std::variant<BandDescriptor, StringDescriptor>;

Charge charge_of(const Descriptor& x);
const Field& field_of(const Descriptor& x);

/// Minimal representative of the rotation orbit {d shifted by j*n}. Rotation
/// re-anchors the cyclic gluing word and preserves the isomorphism class;
/// m and p are untouched. Idempotent.
BandDescriptor canonical_band(const BandDescriptor& b);

/// F_m = B((0,...,0), m, t-1) on E_n.
BandDescriptor unipotent_band(const Field& f, int n, int m);

}  // namespace g1

#endif
