#include <random>

#include "genus1/json_io.hpp"
#include "genus1/stable.hpp"

namespace g1 {

namespace {

struct Suite {
  std::string name;
  long cases = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
  json report() const {
    return json{{"suite", name},
                {"cases", cases},
                {"mismatches", failures.size()},
                {"failures", failures},
                {"ok", failures.empty()}};
  }
};

LaurentMatrix random_unimodular(const Field& f, int n, bool polynomial_side, int ops,
                                std::mt19937_64& rng) {
  LaurentMatrix m = LaurentMatrix::identity(f, n);
  std::uniform_int_distribution<int> pick(0, n - 1), expo(0, 2), cf(-2, 2);
  for (int o = 0; o < ops; ++o) {
    int i = pick(rng), j = pick(rng);
    if (i == j) {
      for (int r = 0; r < n; ++r) std::swap(m.at(r, i), m.at(r, (i + 1) % n));
      continue;
    }
    LaurentPoly q = LaurentPoly::monomial(f, expo(rng) * (polynomial_side ? 1 : -1),
                                          Scalar(f, cf(rng)));
    for (int r = 0; r < n; ++r) m.at(r, j) = m.at(r, j) + q * m.at(r, i);
  }
  return m;
}

Suite verify_birkhoff(const Field& f, std::uint64_t seed, long cases) {
  Suite s;
  s.name = "birkhoff";
  if (cases <= 0) cases = 100;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rdim(1, 5), rexp(-3, 3);
  for (long trial = 0; trial < cases; ++trial) {
    int n = rdim(rng);
    std::vector<int> exps;
    for (int i = 0; i < n; ++i) exps.push_back(rexp(rng));
    std::sort(exps.begin(), exps.end());
    LaurentMatrix d(f, n, n);
    for (int i = 0; i < n; ++i)
      d.at(i, i) = LaurentPoly::monomial(f, exps[static_cast<size_t>(i)], Scalar::one(f));
    LaurentMatrix m = random_unimodular(f, n, false, 6, rng) * d *
                      random_unimodular(f, n, true, 6, rng);
    auto r = birkhoff_factor(m);  // multiply-back is checked internally
    s.check(r.exponents == exps, "exponent multiset changed under conjugation, trial " +
                                     std::to_string(trial));
  }
  return s;
}

Suite verify_cohomology(const Field& f, long cases) {
  Suite s;
  s.name = "cohomology";
  long budget = cases > 0 ? cases : 1L << 30;
  std::vector<long> lambdas;
  for (long l = 1; l < 4 && l < static_cast<long>(f.is_prime_field() ? f.characteristic() : 4); ++l)
    lambdas.push_back(l);
  for (int n : {1, 2}) {
    for (int r = 1; r * n <= 4; ++r) {
      int len = r * n;
      std::vector<int> d(static_cast<size_t>(len), -2);
      while (s.cases < budget) {
        if (!is_periodic(d, n)) {
          for (int m : {1, 2}) {
            for (long lam : lambdas) {
              BandDescriptor b(n, d, m, Poly::linear_minus(Scalar(f, lam)));
              bool match = cohomology_formula(b) == cohomology(band_to_triple(b));
              bool chi = band_to_triple(b).chi() == b.charge().degree;
              std::string tag = "band n=" + std::to_string(n) + " m=" + std::to_string(m);
              s.check(match, "formula/oracle mismatch: " + tag);
              s.check(chi, "chi != degree: " + tag);
            }
          }
          // strings over the same support sequences
          StringDescriptor sd(n, d, 1, f);
          s.check(string_to_triple(sd).chi() == sd.charge().degree, "string chi != degree");
        }
        int i = 0;
        while (i < len && d[static_cast<size_t>(i)] == 2) d[static_cast<size_t>(i++)] = -2;
        if (i == len) break;
        ++d[static_cast<size_t>(i)];
      }
    }
  }
  return s;
}

Suite verify_tensor(const Field& f, std::uint64_t seed, long cases) {
  Suite s;
  s.name = "tensor";
  if (f.characteristic() != 0 && f.characteristic() < 5)
    return s;  // parameter space too small for a meaningful random suite
  if (cases <= 0) cases = 20;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-1, 1), len(1, 3);
  long units = f.is_prime_field() ? static_cast<long>(f.characteristic()) - 1 : 5;
  std::vector<NodalTriple> probes;
  probes.push_back(structure_triple(f, 1));
  probes.push_back(band_to_triple(BandDescriptor(1, {1}, 1, Poly::linear_minus(Scalar::one(f)))));
  probes.push_back(band_to_triple(unipotent_band(f, 1, 2)));
  long done = 0;
  while (done < cases) {
    std::vector<int> da, db;
    int la = len(rng), lb = len(rng);
    for (int i = 0; i < la; ++i) da.push_back(entry(rng));
    for (int i = 0; i < lb; ++i) db.push_back(entry(rng));
    if (is_periodic(da, 1) || is_periodic(db, 1)) continue;
    BandDescriptor a(1, da, 1, Poly::linear_minus(Scalar(f, 1 + static_cast<long>(rng() % units))));
    BandDescriptor b(1, db, 1, Poly::linear_minus(Scalar(f, 1 + static_cast<long>(rng() % units))));
    auto predicted = tensor_bands(a, b);
    NodalTriple lhs = tensor_triples(band_to_triple(a), band_to_triple(b));
    NodalTriple rhs = [&] {
      std::vector<NodalTriple> parts;
      for (const auto& [desc, mult] : predicted.summands)
        for (int c = 0; c < mult; ++c) parts.push_back(descriptor_to_triple(desc));
      NodalTriple t = parts.at(0);
      for (size_t i = 1; i < parts.size(); ++i) t = direct_sum(t, parts[i]);
      return t;
    }();
    bool ok = lhs.chi() == rhs.chi();
    for (const auto& p : probes)
      ok = ok && hom_dim(lhs, p) == hom_dim(rhs, p) && hom_dim(p, lhs) == hom_dim(p, rhs);
    s.check(ok, "tensor fingerprint mismatch at pair " + std::to_string(done));
    ++done;
  }
  return s;
}

Suite verify_duality(const Field& f, std::uint64_t seed, long cases) {
  Suite s;
  s.name = "duality";
  if (cases <= 0) cases = 100;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nn(1, 3), entry(-3, 3), mm(1, 2);
  long units = f.is_prime_field() ? static_cast<long>(f.characteristic()) - 1 : 6;
  for (long trial = 0; trial < cases; ++trial) {
    Descriptor x = [&]() -> Descriptor {
      int n = nn(rng);
      if (rng() % 2 == 0) {
        while (true) {
          int r = 1 + static_cast<int>(rng() % 2);
          std::vector<int> d;
          for (int i = 0; i < r * n; ++i) d.push_back(entry(rng));
          if (is_periodic(d, n)) continue;
          return canonical_band(BandDescriptor(
              n, d, mm(rng), Poly::linear_minus(Scalar(f, 1 + static_cast<long>(rng() % units)))));
        }
      }
      int len = 1 + static_cast<int>(rng() % 4);
      std::vector<int> d;
      for (int i = 0; i < len; ++i) d.push_back(entry(rng));
      return StringDescriptor(n, d, 1 + static_cast<int>(rng() % n), f);
    }();
    Descriptor dd = dual(dual(x));
    bool same = std::holds_alternative<BandDescriptor>(x)
                    ? std::get<BandDescriptor>(dd) == std::get<BandDescriptor>(x)
                    : std::get<StringDescriptor>(dd) == std::get<StringDescriptor>(x);
    s.check(same, "dual of dual differs at trial " + std::to_string(trial));
  }
  // the compactifying sheaf is self-dual
  Descriptor c = dual(Descriptor{StringDescriptor(1, {-1}, 1, f)});
  s.check(std::get<StringDescriptor>(c).d == std::vector<int>{-1}, "S((-1)) is not self-dual");
  // hom duality on line bundle pairs
  long pairs = 0;
  for (int a = -2; a <= 2 && pairs < 20; ++a)
    for (int b = -2; b <= 2 && pairs < 20; ++b) {
      long la = 1 + static_cast<long>(rng() % units), lb = 1 + static_cast<long>(rng() % units);
      BandDescriptor fa(1, {a}, 1, Poly::linear_minus(Scalar(f, la)));
      BandDescriptor fb(1, {b}, 1, Poly::linear_minus(Scalar(f, lb)));
      long hom = hom_dim(band_to_triple(fa), band_to_triple(fb));
      long h0 = 0;
      for (const auto& [desc, mult] :
           tensor_bands(std::get<BandDescriptor>(dual(Descriptor{fa})), fb).summands)
        h0 += mult * cohomology_formula(std::get<BandDescriptor>(desc)).h0;
      s.check(hom == h0, "hom(F,G) != h0(dual(F) tensor G)");
      ++pairs;
    }
  return s;
}

Suite verify_stable(const Field& f) {
  Suite s;
  s.name = "stable";
  for (long r = 2; r <= 8; ++r)
    for (long d = 1; d < r; ++d) {
      if (std::gcd(r, d) != 1) continue;
      auto seq = stable_sequence(r, d);
      long sum = 0;
      for (int v : seq.bits) sum += v;
      s.check(sum == d, "bit sum mismatch");
      long lam = 3;
      if (f.is_prime_field()) {
        lam = 3 % static_cast<long>(f.characteristic());
        if (lam == 0) lam = 1;
      }
      BandDescriptor b(1, seq.sequence(), 1, Poly::linear_minus(Scalar(f, lam)));
      s.check(certify_simple(band_to_triple(b)),
              "stable band not simple: r=" + std::to_string(r) + " d=" + std::to_string(d));
    }
  return s;
}

Suite verify_pushforward(std::uint64_t seed) {
  Suite s;
  s.name = "pushforward";
  // direct image of the structure sheaf along the double cover, both
  // characteristics of the dichotomy
  {
    Field q = Field::rationals();
    NodalTriple down = pushforward_triple(structure_triple(q, 2), 2);
    auto split = decompose_band_data(1, {0, 0}, 1, Poly::linear_minus(Scalar::one(q)));
    std::vector<NodalTriple> parts;
    for (const auto& [desc, mult] : split.summands)
      for (int c = 0; c < mult; ++c) parts.push_back(descriptor_to_triple(desc));
    NodalTriple expect = parts.at(0);
    for (size_t i = 1; i < parts.size(); ++i) expect = direct_sum(expect, parts[i]);
    s.check(split.summands.size() == 2, "rational split should have two line bundles");
    s.check(is_isomorphic(down, expect, seed) == Tristate::yes,
            "pi_2* O is not O + B((0),1,t+1) over the rationals");
  }
  {
    Field f2 = Field::prime(2);
    NodalTriple down = pushforward_triple(structure_triple(f2, 2), 2);
    NodalTriple expect = band_to_triple(unipotent_band(f2, 1, 2));
    s.check(is_isomorphic(down, expect, seed) == Tristate::yes,
            "pi_2* O is not F_2 in characteristic two");
  }
  return s;
}

}  // namespace

json run_verify(const std::string& suite, const Field& field, std::uint64_t seed, long cases) {
  std::vector<Suite> suites;
  if (suite == "birkhoff" || suite == "all") suites.push_back(verify_birkhoff(field, seed, cases));
  if (suite == "cohomology" || suite == "all") suites.push_back(verify_cohomology(field, cases));
  if (suite == "tensor" || suite == "all") suites.push_back(verify_tensor(field, seed, cases));
  if (suite == "duality" || suite == "all") suites.push_back(verify_duality(field, seed, cases));
  if (suite == "stable" || suite == "all") suites.push_back(verify_stable(field));
  if (suite == "pushforward" || suite == "all") suites.push_back(verify_pushforward(seed));
  if (suites.empty())
    fail("invalid-argument", "unknown suite: " + suite,
         "expected birkhoff, cohomology, tensor, duality, stable, pushforward or all");
  json reports = json::array();
  bool ok = true;
  long total = 0, mismatches = 0;
  for (const auto& s : suites) {
    reports.push_back(s.report());
    ok = ok && s.failures.empty();
    total += s.cases;
    mismatches += static_cast<long>(s.failures.size());
  }
  return json{{"suites", reports}, {"cases", total}, {"mismatches", mismatches}, {"ok", ok}};
}

}  // namespace g1
