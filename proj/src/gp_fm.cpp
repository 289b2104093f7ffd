#include "genus1/gp_fm.hpp"

namespace g1 {

TorsionModuleDescriptor TorsionModuleDescriptor::make_m(int n, int m, const Scalar& lambda) {
  if (n < 1 || m < 1) fail("invalid-descriptor", "M family needs n, m >= 1");
  if (lambda.is_zero()) fail("invalid-descriptor", "M family needs lambda != 0");
  return {Family::M, n, m, lambda};
}

TorsionModuleDescriptor TorsionModuleDescriptor::make_n(int n, int m, const Field& f) {
  if (n < 0 || m < 0) fail("invalid-descriptor", "N family needs n, m >= 0");
  return {Family::N, n, m, Scalar::zero(f)};
}

long module_length(const TorsionModuleDescriptor& t) {
  return t.family == TorsionModuleDescriptor::Family::M ? t.n + t.m : t.n + t.m + 1;
}

Descriptor fm_image(const TorsionModuleDescriptor& t) {
  const Field& f = t.lambda.field();
  if (t.family == TorsionModuleDescriptor::Family::M) {
    std::vector<int> d;
    d.push_back(1);
    for (int i = 1; i < t.m; ++i) d.push_back(0);
    d.push_back(-1);
    for (int i = 1; i < t.n; ++i) d.push_back(0);
    Scalar param = (t.n + t.m) % 2 == 0 ? t.lambda : -t.lambda;
    return canonical_band(BandDescriptor(1, std::move(d), 1, Poly::linear_minus(param)));
  }
  std::vector<int> d;
  for (int i = 0; i < t.m; ++i) d.push_back(0);
  d.push_back(-1);
  for (int i = 0; i < t.n; ++i) d.push_back(0);
  return StringDescriptor(1, std::move(d), 1, f);
}

}  // namespace g1
