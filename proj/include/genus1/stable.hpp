#ifndef GENUS1_STABLE_HPP
#define GENUS1_STABLE_HPP

#include "genus1/triples.hpp"

namespace g1 {

/// Result of the nodal stable-bundle sequence algorithm. For degrees outside
/// (0, r) the window is restored by a line-bundle twist: the actual degree
/// sequence is bits[i] + twist.
struct StableSequence {
  std::vector<int> bits;  // {0,1}^r summing to the normalized degree
  int twist = 0;
  std::vector<std::string> trace;  // reduction chain and blow-up steps

  std::vector<int> sequence() const;
};

/// Degree sequence of the stable vector bundle of coprime charge (r, d) on
/// the one-node cycle: Euclidean reduction to (p, 1, p+1) followed by the
/// blow-up rewriting.
StableSequence stable_sequence(long r, long d);

struct CuspidalConstruction {
  CuspidalTriple triple;
  std::vector<std::string> trace;
};

/// The simple vector bundle of coprime charge (r, d) on the cuspidal cubic:
/// i(0) = I_r and i_eps(0) = B(lambda) built by reversing the Euclidean
/// reduction of the block sizes.
CuspidalConstruction cuspidal_simple_matrix(long r, long d, const Scalar& lambda);

/// The unique simple torsion free, not locally free sheaf of coprime charge
/// (r, d): the module has one extra column. The d = +-1 windows use closed
/// forms reproducing the displayed small-rank matrices; other windows are
/// produced by a deterministic seeded search certified simple by the End
/// oracle (simplicity is generic in the valid gluing data).
CuspidalConstruction cuspidal_tf_nonlocallyfree(long r, long d, const Field& field,
                                                std::uint64_t seed = 1);

/// End-dimension 1 test through the Hom oracle.
bool certify_simple(const NodalTriple& t);
bool certify_simple(const CuspidalTriple& t);

}  // namespace g1

#endif
