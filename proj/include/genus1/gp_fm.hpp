#ifndef GENUS1_GP_FM_HPP
#define GENUS1_GP_FM_HPP

#include "genus1/descriptors.hpp"

namespace g1 {

/// Cyclic torsion module over k[[x,y]]/(xy) supported at the node:
/// M((n,m),1,lambda) = R/(x^n + lambda y^m) with n, m >= 1 and lambda != 0,
/// or N(0,(n,m),0) = R/(x^(n+1), y^(m+1)) with n, m >= 0.
struct TorsionModuleDescriptor {
  enum class Family { M, N };
  Family family = Family::M;
  int n = 1;
  int m = 1;
  Scalar lambda;  // meaningful for the M family only

  static TorsionModuleDescriptor make_m(int n, int m, const Scalar& lambda);
  static TorsionModuleDescriptor make_n(int n, int m, const Field& f);
};

/// k-dimension of the module: n + m for M, n + m + 1 for N.
long module_length(const TorsionModuleDescriptor& t);

/// Fourier-Mukai image on the one-node cycle: M((n,m),1,lambda) goes to the
/// degree zero band B((1,0^(m-1),-1,0^(n-1)), 1, t - (-1)^(n+m) lambda) and
/// N(0,(n,m),0) to the degree zero string S((0^m,-1,0^n)).
Descriptor fm_image(const TorsionModuleDescriptor& t);

}  // namespace g1

#endif
