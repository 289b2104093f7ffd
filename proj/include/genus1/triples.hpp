#ifndef GENUS1_TRIPLES_HPP
#define GENUS1_TRIPLES_HPP

#include <cstdint>
#include <vector>

#include "genus1/descriptors.hpp"
#include "genus1/matrix.hpp"

namespace g1 {

/// Gluing data of one component L_i of a cycle: the splitting degrees of the
/// pullback (one entry per row, ascending) and the two gluing matrices.
/// at_zero glues at the node a_i (the point (0:1) on L_i), at_infty at the
/// node a_{i+1} (the point (1:0)). Rows of both matrices are indexed by
/// row_degrees.
struct NodalComponent {
  std::vector<int> row_degrees;
  Matrix at_zero;
  Matrix at_infty;
};

/// Triple (normalization, module at the nodes, gluing map) of a torsion free
/// sheaf on the cycle E_n. Nodes are indexed 0..n-1, component i touching
/// node i at zero and node (i+1) mod n at infinity.
class NodalTriple {
 public:
  NodalTriple(const Field& f, int n) : field_(f), n_(n) {}

  const Field& field() const { return field_; }
  int n() const { return n_; }
  std::vector<NodalComponent>& comps() { return comps_; }
  const std::vector<NodalComponent>& comps() const { return comps_; }
  std::vector<int>& node_cols() { return node_cols_; }
  const std::vector<int>& node_cols() const { return node_cols_; }

  /// Checks full row rank of every gluing matrix, per-node column agreement
  /// and injectivity of the stacked map M -> fibers.
  void validate() const;

  std::vector<long> component_ranks() const;
  long total_rows() const;
  long chi() const;

  /// Sorts each component's rows by degree, permuting the matrices along.
  void normalize_rows();

 private:
  Field field_;
  int n_;
  std::vector<NodalComponent> comps_;
  std::vector<int> node_cols_;
};

/// Triple over the cuspidal cubic: gluing i(0) + eps i_eps(0) at the double
/// point of the normalization.
struct CuspidalTriple {
  Field field;
  std::vector<int> row_degrees;
  Matrix i0;
  Matrix ieps;

  CuspidalTriple(const Field& f, std::vector<int> degs, Matrix a, Matrix b);
  void validate() const;
  long chi() const;
};

/// Companion matrix of p(t)^m: the Frobenius block carrying a band's
/// continuous parameter.
Matrix frobenius_block(const Poly& p, int m);

NodalTriple band_to_triple(const BandDescriptor& b);
NodalTriple string_to_triple(const StringDescriptor& s);
NodalTriple descriptor_to_triple(const Descriptor& x);
/// Structure sheaf of E_n.
NodalTriple structure_triple(const Field& f, int n);

struct Cohomology {
  long h0 = 0;
  long h1 = 0;
  friend bool operator==(const Cohomology& a, const Cohomology& b) {
    return a.h0 == b.h0 && a.h1 == b.h1;
  }
};

/// dim Hom as the solution space of the exact linear system in the morphism
/// data (F, f); the oracle everything else is checked against.
long hom_dim(const NodalTriple& a, const NodalTriple& b);
long hom_dim(const CuspidalTriple& a, const CuspidalTriple& b);

Cohomology cohomology(const NodalTriple& t);
Cohomology cohomology(const CuspidalTriple& t);

NodalTriple direct_sum(const NodalTriple& a, const NodalTriple& b);
NodalTriple tensor_triples(const NodalTriple& a, const NodalTriple& b);
CuspidalTriple direct_sum(const CuspidalTriple& a, const CuspidalTriple& b);

/// Copies the gluing data around the degree-r cyclic cover E_nr -> E_n.
NodalTriple pullback_triple(const NodalTriple& t, int r);
/// Direct image along E_nr -> E_n; the column groups at the wrap component
/// shift by one, which is what turns line bundles into bands.
NodalTriple pushforward_triple(const NodalTriple& t, int r);

enum class Tristate { yes, no, inconclusive };

/// Randomized isomorphism test: certain "yes" (an invertible morphism was
/// found) and certain "no" (an invariant separates); "inconclusive" only when
/// the sampling budget over a small field is exhausted.
Tristate is_isomorphic(const NodalTriple& a, const NodalTriple& b, std::uint64_t seed = 1);
Tristate is_isomorphic(const CuspidalTriple& a, const CuspidalTriple& b, std::uint64_t seed = 1);

}  // namespace g1

#endif
