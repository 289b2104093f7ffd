#ifndef GENUS1_SHEAF_OPS_HPP
#define GENUS1_SHEAF_OPS_HPP

#include "genus1/triples.hpp"

namespace g1 {

struct DecompositionResult {
  std::vector<std::pair<Descriptor, int>> summands;  // canonical descriptor, multiplicity
  Charge total() const;
};

/// B(d,m,p)^v = B(-d, m, p*) with p*(t) = t^k p(1/t) normalized monic;
/// S(e,f)^v = S(kappa - e, f) with kappa = (-1,0,...,0,-1), or (-2) for a
/// one-letter word. Outputs are canonicalized; dual of dual is the identity.
Descriptor dual(const Descriptor& x);

/// Splits band data whose degree word is periodic: B(e^s, m, p) decomposes
/// along the irreducible factorization of p(t^s), factor w^a giving the
/// summand B(e, a*m, w). Non-periodic data passes through unchanged.
DecompositionResult decompose_band_data(int n, const std::vector<int>& d, int m, const Poly& p);

/// Closed-form tensor product on the one-node cycle for linear parameters;
/// multiplicities are pulled out through the unipotent factor, which needs
/// characteristic zero.
DecompositionResult tensor_bands(const BandDescriptor& a, const BandDescriptor& b);

/// Multiset {h_i} with F_e (x) F_f = sum F_{h_i}, ascending. Characteristic
/// zero uses the Clebsch-Gordan ladder; positive characteristic computes the
/// Jordan type of the Kronecker product of unipotent blocks.
std::vector<int> tensor_unipotent(int e, int f, const Field& field);

/// pi_r^* B(d,1,p) = band data (d^r, 1, p(t) with parameter power r) on E_nr,
/// split by the periodic rule.
DecompositionResult pullback_etale(const BandDescriptor& b, int r);

/// Direct image of L(d, lambda) (x) F_m along E_nr -> E_n. Fails with
/// "decomposable-pushforward" when d is periodic over E_n, listing the split.
BandDescriptor pushforward_line(int target_n, const std::vector<int>& d, const Poly& p, int m);

/// Closed cohomology formula for bands: the positive-part count theta is
/// evaluated on the cyclic word; h1 comes from chi.
Cohomology cohomology_formula(const BandDescriptor& b);

}  // namespace g1

#endif
