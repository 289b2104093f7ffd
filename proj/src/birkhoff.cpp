#include <algorithm>
#include <numeric>

#include "genus1/laurent.hpp"

namespace g1 {

namespace {

// Running state: A = U * M * V with U a product of row operations over
// k[z^-1] and V a product of column operations over k[z]. We keep S = V and
// T = U^-1 so that T^-1 M S = A at all times.
struct Reduction {
  LaurentMatrix a, s, t;
  explicit Reduction(const LaurentMatrix& m)
      : a(m), s(LaurentMatrix::identity(m.field(), m.cols())),
        t(LaurentMatrix::identity(m.field(), m.rows())) {}

  const Field& field() const { return a.field(); }
  int size() const { return a.rows(); }

  // col_j += q * col_i, q in k[z]
  void col_add(int j, int i, const LaurentPoly& q) {
    for (int r = 0; r < a.rows(); ++r) a.at(r, j) = a.at(r, j) + q * a.at(r, i);
    for (int r = 0; r < s.rows(); ++r) s.at(r, j) = s.at(r, j) + q * s.at(r, i);
  }
  void col_scale(int j, const Scalar& c) {
    for (int r = 0; r < a.rows(); ++r) a.at(r, j) = a.at(r, j) * c;
    for (int r = 0; r < s.rows(); ++r) s.at(r, j) = s.at(r, j) * c;
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < s.rows(); ++r) std::swap(s.at(r, i), s.at(r, j));
  }
  // row_i += q * row_j, q in k[z^-1]; T picks up the inverse operation
  void row_add(int i, int j, const LaurentPoly& q) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = a.at(i, c) + q * a.at(j, c);
    for (int r = 0; r < t.rows(); ++r) t.at(r, j) = t.at(r, j) - q * t.at(r, i);
  }
  void row_swap(int i, int j) {
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int r = 0; r < t.rows(); ++r) std::swap(t.at(r, i), t.at(r, j));
  }
  // columns (j, i) <- (alpha*col_j + beta*col_i, gamma*col_j + delta*col_i),
  // all four in k[z] with constant nonzero determinant
  void col_pair(int j, int i, const LaurentPoly& alpha, const LaurentPoly& beta,
                const LaurentPoly& gamma, const LaurentPoly& delta) {
    auto apply = [&](LaurentMatrix& m) {
      for (int r = 0; r < m.rows(); ++r) {
        LaurentPoly cj = m.at(r, j), ci = m.at(r, i);
        m.at(r, j) = alpha * cj + beta * ci;
        m.at(r, i) = gamma * cj + delta * ci;
      }
    };
    apply(a);
    apply(s);
  }
};

// Step 1: lower-triangularize with monomial diagonal via column gcd reduction.
// Row k is cleared against a common power z^v so the whole Euclid happens in
// k[z]; column operations therefore stay polynomial.
void triangularize(Reduction& red) {
  int n = red.size();
  for (int k = 0; k < n; ++k) {
    while (true) {
      int v = 0, count = 0;
      for (int c = k; c < n; ++c)
        if (!red.a.at(k, c).is_zero()) {
          v = count == 0 ? red.a.at(k, c).val() : std::min(v, red.a.at(k, c).val());
          ++count;
        }
      if (count == 0) fail("internal", "singular matrix reached triangularization");
      int pivot = -1;
      for (int c = k; c < n; ++c)
        if (!red.a.at(k, c).is_zero() &&
            (pivot < 0 || red.a.at(k, c).top() < red.a.at(k, pivot).top()))
          pivot = c;
      if (count == 1) {
        if (pivot != k) red.col_swap(k, pivot);
        break;
      }
      Poly bp = red.a.at(k, pivot).to_poly(v);
      for (int c = k; c < n; ++c) {
        if (c == pivot || red.a.at(k, c).is_zero()) continue;
        Poly bc = red.a.at(k, c).to_poly(v);
        Poly q = Poly::divmod(bc, bp).first;
        red.col_add(c, pivot, LaurentPoly::from_poly(-q));
      }
    }
    // the surviving entry must be a unit times z^m, else det is not a unit
    const LaurentPoly& e = red.a.at(k, k);
    Poly p = e.to_poly(e.val());
    if (p.degree() != 0) fail("internal", "non-unit pivot in triangularization");
    red.col_scale(k, p.coeff(0).inverse());
  }
}

// One entry reduction: remove exponents <= m_j (row ops) and >= m_i (col ops).
void reduce_entry(Reduction& red, int i, int j) {
  int mj = red.a.at(j, j).val(), mi = red.a.at(i, i).val();
  while (!red.a.at(i, j).is_zero()) {
    const LaurentPoly& p = red.a.at(i, j);
    int lo = p.val(), hi = p.top();
    if (lo <= mj) {
      red.row_add(i, j, LaurentPoly::monomial(red.field(), lo - mj, -p.coeff(lo)));
    } else if (hi >= mi) {
      red.col_add(j, i, LaurentPoly::monomial(red.field(), hi - mi, -p.coeff(hi)));
    } else {
      break;  // all remaining exponents sit strictly between m_j and m_i
    }
  }
}

// Step 2 completion at (i, j): kills the reduced entry, replacing the diagonal
// pair (z^m_j, z^m_i) by (z^d, z^(m_j+m_i-d)); needs all entries at strictly
// smaller |row-col| distance to vanish.
void complete_pair(Reduction& red, int i, int j) {
  const Field& f = red.field();
  int mi = red.a.at(i, i).val();
  const LaurentPoly& p = red.a.at(i, j);
  int d = p.val();
  Poly u = p.to_poly(d);
  auto [g, aa, bb] = Poly::ext_gcd(u, Poly::monomial(f, mi - d, Scalar::one(f)));
  if (g.degree() != 0 || !g.coeff(0).is_one()) fail("internal", "completion gcd not 1");
  // completion matrix [[a, z^(mi-d)], [b, -u]] on columns (j, i); det -1
  red.col_pair(j, i, LaurentPoly::from_poly(aa), LaurentPoly::from_poly(bb),
               LaurentPoly::monomial(f, mi - d, Scalar::one(f)), -LaurentPoly::from_poly(u));
  red.row_swap(i, j);
}

void diagonal_sort(Reduction& red) {
  int n = red.size();
  for (int i = 0; i < n; ++i) {
    int best = i;
    for (int j = i + 1; j < n; ++j)
      if (red.a.at(j, j).val() < red.a.at(best, best).val()) best = j;
    if (best != i) {
      red.row_swap(i, best);
      red.col_swap(i, best);
    }
  }
}

long pair_weight(const Reduction& red) {
  long w = 0;
  int n = red.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      w += std::abs(red.a.at(i, i).val() - red.a.at(j, j).val());
  return w;
}

bool entries_in(const LaurentPoly& p, int lo_min, int hi_max) {
  return p.is_zero() || (p.val() >= lo_min && p.top() <= hi_max);
}

}  // namespace

BirkhoffResult birkhoff_factor(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) fail("invalid-argument", "Birkhoff factorization needs a square matrix");
  int n = m.rows();
  LaurentPoly dm = m.det();
  if (dm.is_zero() || !dm.is_monomial())
    fail("not-invertible",
         "determinant is not a unit of k[z,z^-1]",
         "det = " + dm.str());
  int det_exp = dm.val();

  Reduction red(m);
  triangularize(red);

  // Steps 2 and 3: repeatedly pick the below-diagonal entry that is minimal
  // in the order (|i-j|, then j), reduce it against the diagonal windows and,
  // if it survives, apply the completion matrix. The diagonal pair weight
  // strictly drops at every completion, which bounds the loop.
  long guard = (pair_weight(red) + 2) * (static_cast<long>(n) * n + 2) + 16;
  while (true) {
    if (--guard < 0) fail("internal", "Birkhoff reduction failed to terminate");
    int bi = -1, bj = -1;
    for (int dist = 1; dist < n && bi < 0; ++dist)
      for (int j = 0; j + dist < n; ++j)
        if (!red.a.at(j + dist, j).is_zero()) {
          bi = j + dist;
          bj = j;
          break;
        }
    if (bi < 0) break;
    reduce_entry(red, bi, bj);
    if (red.a.at(bi, bj).is_zero()) continue;
    complete_pair(red, bi, bj);
  }

  diagonal_sort(red);

  // normalize diagonal entries to exactly z^d
  for (int i = 0; i < n; ++i) {
    const LaurentPoly& e = red.a.at(i, i);
    if (!e.is_monomial()) fail("internal", "non-monomial diagonal after reduction");
    Scalar c = e.coeff(e.val());
    if (!c.is_one()) red.col_scale(i, c.inverse());
  }

  std::vector<int> exps;
  exps.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) exps.push_back(red.a.at(i, i).val());
  if (std::accumulate(exps.begin(), exps.end(), 0) != det_exp)
    fail("internal", "Birkhoff exponent sum does not match determinant");

  // self-check: S over k[z], T over k[z^-1], and M*S == T*diag exactly
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!entries_in(red.s.at(i, j), 0, 1 << 30)) fail("internal", "S has negative exponents");
      if (!entries_in(red.t.at(i, j), -(1 << 30), 0)) fail("internal", "T has positive exponents");
    }
  LaurentMatrix td = red.t;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) td.at(i, j) = td.at(i, j).shifted(exps[static_cast<size_t>(j)]);
  if (!(m * red.s == td)) fail("internal", "Birkhoff multiply-back check failed");

  return BirkhoffResult{red.s, red.t, std::move(exps)};
}

std::vector<int> splitting_type(const LaurentMatrix& m) {
  auto r = birkhoff_factor(m);
  std::vector<int> s;
  s.reserve(r.exponents.size());
  for (int d : r.exponents) s.push_back(-d);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace g1
