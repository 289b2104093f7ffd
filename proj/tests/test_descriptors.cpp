#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genus1/descriptors.hpp"
#include "genus1/triples.hpp"

using namespace g1;

namespace {
BandDescriptor band(const Field& f, int n, std::vector<int> d, int m, long lambda) {
  return BandDescriptor(n, std::move(d), m, Poly::linear_minus(Scalar(f, lambda)));
}
}  // namespace

TEST_CASE("euler form: spec examples and antisymmetry") {
  CHECK(euler_form({1, 0}, {0, 1}) == 1);
  CHECK(euler_form({2, 1}, {3, 5}) == 7);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 200; ++i) {
    Charge a{d(rng), d(rng)}, b{d(rng), d(rng)};
    CHECK(euler_form(a, b) == -euler_form(b, a));
    CHECK(euler_form(a, a) == 0);
  }
}

TEST_CASE("is_periodic: spec examples") {
  CHECK(is_periodic({1, 1}, 1).has_value());
  CHECK(is_periodic({1, 1}, 1)->base == std::vector<int>{1});
  CHECK(is_periodic({1, 1}, 1)->repeats == 2);
  CHECK_FALSE(is_periodic({0, 1, 1, 3, 1, -2}, 2).has_value());
  auto p = is_periodic({0, 1, 0, 1}, 2);
  REQUIRE(p.has_value());
  CHECK(p->base == std::vector<int>{0, 1});
  CHECK(p->repeats == 2);
  // (0,0) on E_2 is a full-length word, not a repetition of a valid period
  CHECK_FALSE(is_periodic({0, 0}, 2).has_value());
  // smallest period wins
  auto q = is_periodic({2, 2, 2, 2}, 1);
  REQUIRE(q.has_value());
  CHECK(q->base == std::vector<int>{2});
  CHECK(q->repeats == 4);
}

TEST_CASE("band validation") {
  Field f = Field::rationals();
  CHECK_THROWS_AS(band(f, 1, {1, 1}, 1, 3), error);                       // periodic
  CHECK_THROWS_AS(band(f, 2, {1, 2, 3}, 1, 3), error);                    // length not multiple of n
  CHECK_THROWS_AS(band(f, 1, {1}, 0, 3), error);                          // m < 1
  CHECK_THROWS_AS(band(f, 1, {1}, 1, 0), error);                          // p = t
  CHECK_THROWS_AS(BandDescriptor(1, {1}, 1, Poly::from_ints(f, {-1, 0, 1})), error);  // reducible
  CHECK_NOTHROW(BandDescriptor(1, {1}, 1, Poly::from_ints(f, {-2, 0, 1})));
}

TEST_CASE("rank and degree of bands") {
  Field f = Field::rationals();
  // F_m-shaped band: rank m, degree 0
  for (int n : {1, 2, 3})
    for (int m : {1, 2, 3}) {
      Charge c = unipotent_band(f, n, m).charge();
      CHECK(c.rank == m);
      CHECK(c.degree == 0);
    }
  // line bundle of multidegree (1)
  CHECK(band(f, 1, {1}, 1, 4).charge() == Charge{1, 1});
  // the worked example: rank 3mk, degree 4mk
  for (int m : {1, 2}) {
    Poly p = Poly::from_ints(f, {-2, 0, 1});  // irreducible, k = 2
    BandDescriptor b(2, {0, 1, 1, 3, 1, -2}, m, p);
    CHECK(b.charge().rank == 3 * m * 2);
    CHECK(b.charge().degree == 4 * m * 2);
  }
}

TEST_CASE("rank and degree of strings, with component profile") {
  Field f = Field::rationals();
  StringDescriptor s1(1, {-1}, 1, f);
  CHECK(s1.charge() == Charge{1, 0});
  StringDescriptor s2(1, {0}, 1, f);
  CHECK(s2.charge() == Charge{1, 1});
  StringDescriptor s3(2, {-1, 0, 1, -1, 1}, 2, f);
  CHECK(s3.charge().degree == 1);
  CHECK(s3.component_ranks() == std::vector<long>{2, 3});
}

TEST_CASE("chi computed by the triple oracle equals the descriptor degree") {
  // bands and strings with |d| <= 6, entries in [-3,3], m <= 2, deg p <= 2
  for (bool rational : {true, false}) {
    Field f = rational ? Field::rationals() : Field::prime(5);
    std::mt19937_64 rng(rational ? 61 : 62);
    std::uniform_int_distribution<int> nn(1, 2), entry(-3, 3), mm(1, 2), kk(1, 2);
    for (int trial = 0; trial < 60; ++trial) {
      int n = nn(rng);
      int r = 1 + static_cast<int>(rng() % (6 / n));
      std::vector<int> d;
      for (int i = 0; i < r * n; ++i) d.push_back(entry(rng));
      if (is_periodic(d, n)) continue;
      Poly p(f);
      if (kk(rng) == 1) {
        p = Poly::linear_minus(Scalar(f, 1 + static_cast<long>(rng() % 3)));
      } else {
        p = rational ? Poly::from_ints(f, {-2, 0, 1}) : Poly::from_ints(f, {3, 1, 1});
        if (!is_irreducible(p)) continue;
      }
      BandDescriptor b(n, d, mm(rng), p);
      CHECK(band_to_triple(b).chi() == b.charge().degree);
      std::vector<int> sd(d.begin(), d.begin() + 1 + static_cast<long>(rng() % d.size()));
      StringDescriptor s(n, sd, 1 + static_cast<int>(rng() % n), f);
      CHECK(string_to_triple(s).chi() == s.charge().degree);
    }
  }
}

TEST_CASE("canonical band: spec example and idempotence") {
  Field f = Field::rationals();
  BandDescriptor b = band(f, 1, {1, 0}, 1, 4);
  CHECK(canonical_band(b).d == std::vector<int>{0, 1});
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    int r = 1 + static_cast<int>(rng() % 3);
    std::vector<int> d;
    for (int i = 0; i < r * n; ++i) d.push_back(entry(rng));
    if (is_periodic(d, n)) continue;
    BandDescriptor x = band(f, n, d, 1 + static_cast<int>(rng() % 2), 3);
    BandDescriptor c = canonical_band(x);
    CHECK(canonical_band(c) == c);
    CHECK(c.charge() == x.charge());
  }
}

TEST_CASE("component multidegree of the worked example") {
  Field f = Field::rationals();
  BandDescriptor b = band(f, 2, {0, 1, 1, 3, 1, -2}, 1, 4);
  CHECK(b.component_multidegree(1) == std::vector<int>{0, 1, 1});
  CHECK(b.component_multidegree(2) == std::vector<int>{-2, 1, 3});
  StringDescriptor s(2, {-1, 0, 1, -1, 1}, 2, f);
  CHECK(s.component_multidegree(1) == std::vector<int>{-1, 0});
  CHECK(s.component_multidegree(2) == std::vector<int>{-1, 1, 1});
}
