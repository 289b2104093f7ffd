#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "genus1/stable.hpp"

using namespace g1;

namespace {

Matrix from_ints(const Field& f, int rows, int cols, std::initializer_list<long> vals) {
  Matrix m(f, rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(f, *it++);
  return m;
}

NodalTriple stable_band_triple(const Field& f, long r, long d, long lambda) {
  auto seq = stable_sequence(r, d);
  BandDescriptor b(1, seq.sequence(), 1, Poly::linear_minus(Scalar(f, lambda)));
  return band_to_triple(b);
}

}  // namespace

TEST_CASE("stable sequence golden example (19, 11)") {
  auto s = stable_sequence(19, 11);
  std::vector<int> expect{1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0};
  CHECK(s.bits == expect);
  CHECK(s.twist == 0);
  // the reduction chain is traced for auditability
  REQUIRE(!s.trace.empty());
  CHECK(s.trace[0].find("(11,8,19)") != std::string::npos);
  CHECK(s.trace[0].find("(B,1)") != std::string::npos);
  CHECK(s.trace[0].find("(A,1)") != std::string::npos);
  CHECK(s.trace[0].find("(2,1,3)") != std::string::npos);
}

TEST_CASE("stable sequence small cases") {
  CHECK(stable_sequence(2, 1).bits == std::vector<int>{0, 1});
  CHECK(stable_sequence(3, 1).bits == std::vector<int>{0, 0, 1});
  CHECK(stable_sequence(3, 2).bits == std::vector<int>{1, 1, 0});
  CHECK_THROWS_AS(stable_sequence(4, 2), error);
  CHECK_THROWS_AS(stable_sequence(6, 3), error);
}

TEST_CASE("stable sequence invariants for all coprime pairs up to rank 8") {
  for (long r = 2; r <= 8; ++r)
    for (long d = 1; d < r; ++d) {
      if (std::gcd(r, d) != 1) continue;
      auto s = stable_sequence(r, d);
      CHECK(static_cast<long>(s.bits.size()) == r);
      CHECK(std::accumulate(s.bits.begin(), s.bits.end(), 0L) == d);
      // majority symbol count equals max(d, r-d)
      long ones = std::count(s.bits.begin(), s.bits.end(), 1);
      long majority = std::max(ones, r - ones);
      CHECK(majority == std::max(d, r - d));
      // (r, d) and (r, r-d) are exchanged by the bit swap; when d = r-d the
      // mapping rule ties and the swap is a rotation of the same word
      auto t = stable_sequence(r, r - d);
      if (2 * d != r) {
        for (size_t i = 0; i < s.bits.size(); ++i) CHECK(s.bits[i] == 1 - t.bits[i]);
      } else {
        std::vector<int> swapped(s.bits.size());
        for (size_t i = 0; i < s.bits.size(); ++i) swapped[i] = 1 - s.bits[i];
        std::vector<int> doubled = t.bits;
        doubled.insert(doubled.end(), t.bits.begin(), t.bits.end());
        bool rotation = false;
        for (size_t off = 0; off < t.bits.size(); ++off) {
          bool eq = true;
          for (size_t i = 0; i < swapped.size(); ++i) eq &= swapped[i] == doubled[off + i];
          rotation |= eq;
        }
        CHECK(rotation);
      }
    }
}

TEST_CASE("stable sequence with degrees outside the window twists") {
  auto s = stable_sequence(5, 7);
  CHECK(s.twist == 1);
  CHECK(std::accumulate(s.bits.begin(), s.bits.end(), 0L) == 2);
  auto seq = s.sequence();
  CHECK(std::accumulate(seq.begin(), seq.end(), 0L) == 7);
  auto n = stable_sequence(3, -1);
  CHECK(n.twist == -1);
  auto nseq = n.sequence();
  CHECK(std::accumulate(nseq.begin(), nseq.end(), 0L) == -1);
  auto line = stable_sequence(1, 4);
  CHECK(line.sequence() == std::vector<int>{4});
}

TEST_CASE("stable bands are simple over F_7") {
  Field f = Field::prime(7);
  for (long r = 2; r <= 8; ++r)
    for (long d = 1; d < r; ++d) {
      if (std::gcd(r, d) != 1) continue;
      CHECK(certify_simple(stable_band_triple(f, r, d, 3)));
    }
  // and for every lambda on a couple of charges
  for (long lambda = 1; lambda <= 6; ++lambda) {
    CHECK(certify_simple(stable_band_triple(f, 2, 1, lambda)));
    CHECK(certify_simple(stable_band_triple(f, 5, 2, lambda)));
  }
}

TEST_CASE("certify_simple rejects decomposables and unipotents") {
  Field f = Field::prime(7);
  NodalTriple o = structure_triple(f, 1);
  CHECK(certify_simple(o));
  CHECK_FALSE(certify_simple(direct_sum(o, o)));
  CHECK_FALSE(certify_simple(band_to_triple(unipotent_band(f, 1, 2))));
}

TEST_CASE("cuspidal simple matrices: golden displays") {
  Field q = Field::rationals();
  // (1, 0, lambda): 1 + eps lambda
  auto c1 = cuspidal_simple_matrix(1, 0, Scalar(q, 9));
  CHECK(c1.triple.row_degrees == std::vector<int>{0});
  CHECK(c1.triple.i0 == Matrix::identity(q, 1));
  CHECK(c1.triple.ieps == from_ints(q, 1, 1, {9}));
  // (2, 1, lambda)
  auto c2 = cuspidal_simple_matrix(2, 1, Scalar(q, 9));
  CHECK(c2.triple.row_degrees == std::vector<int>{0, 1});
  CHECK(c2.triple.i0 == Matrix::identity(q, 2));
  CHECK(c2.triple.ieps == from_ints(q, 2, 2, {0, 1, 0, 9}));
  // (7, 12, lambda): normalization O(1)^2 + O(2)^5, chain (2,5)->(2,3)->(2,1)->(1,1)
  auto c7 = cuspidal_simple_matrix(7, 12, Scalar(q, 9));
  CHECK(c7.triple.row_degrees == std::vector<int>{1, 1, 2, 2, 2, 2, 2});
  CHECK(c7.triple.i0 == Matrix::identity(q, 7));
  CHECK(c7.triple.ieps == from_ints(q, 7, 7,
                                    {0, 0, 1, 0, 0, 0, 0,  //
                                     0, 0, 0, 1, 0, 0, 0,  //
                                     0, 0, 0, 0, 1, 0, 0,  //
                                     0, 0, 0, 0, 0, 1, 0,  //
                                     0, 0, 0, 0, 0, 1, 0,  //
                                     0, 0, 0, 0, 0, 9, 1,  //
                                     0, 0, 0, 0, 0, 0, 0}));
  std::string chain;
  for (const auto& line : c7.trace) chain += line + "; ";
  CHECK(chain.find("(2,1) -> (2,3)") != std::string::npos);
  CHECK(chain.find("(2,3) -> (2,5)") != std::string::npos);
  CHECK_THROWS_AS(cuspidal_simple_matrix(4, 2, Scalar(q, 3)), error);
}

TEST_CASE("cuspidal simple bundles: distinct lambda are non-isomorphic") {
  Field f = Field::prime(7);
  for (long r = 1; r <= 5; ++r)
    for (long d = 0; d < r; ++d) {
      if (std::gcd(r, std::abs(d)) != 1 && !(r == 1 && d == 0)) continue;
      for (long la = 1; la <= 3; ++la) {
        auto a = cuspidal_simple_matrix(r, d, Scalar(f, la));
        CHECK(certify_simple(a.triple));
        for (long lb = la + 1; lb <= 3; ++lb) {
          auto b = cuspidal_simple_matrix(r, d, Scalar(f, lb));
          CHECK(is_isomorphic(a.triple, b.triple) == Tristate::no);
        }
      }
    }
}

TEST_CASE("cuspidal torsion free sheaves: golden displays") {
  Field q = Field::rationals();
  auto c1 = cuspidal_tf_nonlocallyfree(1, 0, q);
  CHECK(c1.triple.row_degrees == std::vector<int>{-1});
  CHECK(c1.triple.i0 == from_ints(q, 1, 2, {1, 0}));
  CHECK(c1.triple.ieps == from_ints(q, 1, 2, {0, 1}));
  auto c2 = cuspidal_tf_nonlocallyfree(2, 1, q);
  CHECK(c2.triple.row_degrees == std::vector<int>{0, 0});
  CHECK(c2.triple.i0 == from_ints(q, 2, 3, {1, 0, 0, 0, 1, 0}));
  CHECK(c2.triple.ieps == from_ints(q, 2, 3, {0, 1, 0, 0, 0, 1}));
  CHECK_THROWS_AS(cuspidal_tf_nonlocallyfree(4, 2, q), error);
}

TEST_CASE("cuspidal torsion free sheaves: simple for every coprime charge") {
  for (const Field& f : {Field::prime(7), Field::rationals()}) {
    for (long r = 1; r <= 7; ++r)
      for (long d = -1; d < r + 2; ++d) {
        if (std::gcd(r, std::abs(d)) != 1 && !(r == 1 && d == 0)) continue;
        auto c = cuspidal_tf_nonlocallyfree(r, d, f);
        CHECK(certify_simple(c.triple));
        CHECK(c.triple.chi() == d);
        CHECK(c.triple.i0.cols() == static_cast<int>(r) + 1);
      }
  }
  // the certified search also works over the smallest fields
  for (const Field& f : {Field::prime(2), Field::prime(3)}) {
    for (long r = 2; r <= 6; ++r)
      for (long d = 1; d < r; ++d) {
        if (std::gcd(r, d) != 1) continue;
        CHECK(certify_simple(cuspidal_tf_nonlocallyfree(r, d, f).triple));
      }
  }
}

TEST_CASE("cuspidal torsion free sheaf is unique: different seeds agree") {
  Field f = Field::prime(7);
  for (auto [r, d] : std::vector<std::pair<long, long>>{{3, 2}, {5, 2}, {5, 3}, {7, 4}}) {
    auto a = cuspidal_tf_nonlocallyfree(r, d, f, 1);
    auto b = cuspidal_tf_nonlocallyfree(r, d, f, 99);
    CHECK(is_isomorphic(a.triple, b.triple) == Tristate::yes);
  }
}
