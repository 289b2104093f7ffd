#include "genus1/triples.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace g1 {

namespace {

// Sorted substrip layout: given the labels of a component's strips in lap
// order, returns each lap's starting row in the (value, occurrence)-sorted
// block layout.
std::vector<int> substrip_rows(const std::vector<int>& values, int height) {
  struct Strip {
    int value, occ, lap;
  };
  std::vector<Strip> strips;
  for (size_t t = 0; t < values.size(); ++t) {
    int occ = 0;
    for (size_t u = 0; u <= t; ++u)
      if (values[u] == values[t]) ++occ;
    strips.push_back({values[t], occ, static_cast<int>(t)});
  }
  std::sort(strips.begin(), strips.end(), [](const Strip& a, const Strip& b) {
    return a.value != b.value ? a.value < b.value : a.occ < b.occ;
  });
  std::vector<int> row_of_lap(values.size());
  for (size_t pos = 0; pos < strips.size(); ++pos)
    row_of_lap[static_cast<size_t>(strips[pos].lap)] = static_cast<int>(pos) * height;
  return row_of_lap;
}

std::vector<int> sorted_degrees(const std::vector<int>& values, int height) {
  std::vector<int> degs;
  for (int v : values)
    for (int c = 0; c < height; ++c) degs.push_back(v);
  std::sort(degs.begin(), degs.end());
  return degs;
}

void paste_identity(Matrix& m, int r0, int c0, int k) {
  for (int i = 0; i < k; ++i) m.at(r0 + i, c0 + i) = Scalar::one(m.field());
}

}  // namespace

void NodalTriple::validate() const {
  if (static_cast<int>(comps_.size()) != n_ || static_cast<int>(node_cols_.size()) != n_)
    fail("invalid-triple", "component or node count mismatch");
  for (int i = 0; i < n_; ++i) {
    const NodalComponent& c = comps_[static_cast<size_t>(i)];
    int rows = static_cast<int>(c.row_degrees.size());
    if (c.at_zero.rows() != rows || c.at_infty.rows() != rows)
      fail("invalid-triple", "gluing matrix row count does not match the splitting");
    if (c.at_zero.cols() != node_cols_[static_cast<size_t>(i)])
      fail("invalid-triple", "gluing matrix at zero has wrong column count");
    if (c.at_infty.cols() != node_cols_[static_cast<size_t>((i + 1) % n_)])
      fail("invalid-triple", "gluing matrix at infinity has wrong column count");
    if (rows > 0 && c.at_zero.rank() != std::min(rows, c.at_zero.cols()))
      fail("invalid-triple", "gluing matrix at zero is not of full row rank");
    if (rows > 0 && c.at_infty.rank() != std::min(rows, c.at_infty.cols()))
      fail("invalid-triple", "gluing matrix at infinity is not of full row rank");
    if (c.at_zero.rows() < c.at_zero.cols() || c.at_infty.rows() < c.at_infty.cols()) {
      // full row rank with fewer rows than columns cannot give an epimorphism
      // onto the fiber; the stacked check below still applies
    }
  }
  for (int v = 0; v < n_; ++v) {
    const Matrix& a = comps_[static_cast<size_t>(v)].at_zero;
    const Matrix& b = comps_[static_cast<size_t>((v - 1 + n_) % n_)].at_infty;
    Matrix st = Matrix::vstack(a, b);
    if (st.rank() != node_cols_[static_cast<size_t>(v)])
      fail("invalid-triple", "module does not embed into the fibers at node " + std::to_string(v));
  }
}

std::vector<long> NodalTriple::component_ranks() const {
  std::vector<long> r;
  r.reserve(comps_.size());
  for (const auto& c : comps_) r.push_back(static_cast<long>(c.row_degrees.size()));
  return r;
}

long NodalTriple::total_rows() const {
  long s = 0;
  for (const auto& c : comps_) s += static_cast<long>(c.row_degrees.size());
  return s;
}

long NodalTriple::chi() const {
  long chi_norm = 0;
  for (const auto& c : comps_)
    for (int d : c.row_degrees) chi_norm += d + 1;
  long m = std::accumulate(node_cols_.begin(), node_cols_.end(), 0L);
  return chi_norm + m - 2 * total_rows();
}

void NodalTriple::normalize_rows() {
  for (auto& c : comps_) {
    int rows = static_cast<int>(c.row_degrees.size());
    std::vector<int> idx(static_cast<size_t>(rows));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return c.row_degrees[static_cast<size_t>(a)] < c.row_degrees[static_cast<size_t>(b)];
    });
    std::vector<int> degs(static_cast<size_t>(rows));
    Matrix z(field_, rows, c.at_zero.cols()), f(field_, rows, c.at_infty.cols());
    for (int r = 0; r < rows; ++r) {
      degs[static_cast<size_t>(r)] = c.row_degrees[static_cast<size_t>(idx[static_cast<size_t>(r)])];
      for (int j = 0; j < z.cols(); ++j) z.at(r, j) = c.at_zero.at(idx[static_cast<size_t>(r)], j);
      for (int j = 0; j < f.cols(); ++j) f.at(r, j) = c.at_infty.at(idx[static_cast<size_t>(r)], j);
    }
    c.row_degrees = std::move(degs);
    c.at_zero = std::move(z);
    c.at_infty = std::move(f);
  }
}

CuspidalTriple::CuspidalTriple(const Field& f, std::vector<int> degs, Matrix a, Matrix b)
    : field(f), row_degrees(std::move(degs)), i0(std::move(a)), ieps(std::move(b)) {}

void CuspidalTriple::validate() const {
  int rows = static_cast<int>(row_degrees.size());
  if (i0.rows() != rows || ieps.rows() != rows)
    fail("invalid-triple", "cuspidal gluing rows do not match the splitting");
  if (i0.cols() != ieps.cols()) fail("invalid-triple", "cuspidal gluing column mismatch");
  if (!std::is_sorted(row_degrees.begin(), row_degrees.end()))
    fail("invalid-triple", "cuspidal row degrees must be ascending");
  if (i0.rank() != rows) fail("invalid-triple", "i(0) is not of full row rank");
  if (Matrix::vstack(i0, ieps).rank() != i0.cols())
    fail("invalid-triple", "module does not embed into the fiber at the cusp");
}

long CuspidalTriple::chi() const {
  long chi_norm = 0;
  for (int d : row_degrees) chi_norm += d + 1;
  return chi_norm + i0.cols() - 2 * static_cast<long>(row_degrees.size());
}

Matrix frobenius_block(const Poly& p, int m) {
  Poly q = Poly::constant(Scalar::one(p.field()));
  for (int i = 0; i < m; ++i) q = q * p;
  int nn = q.degree();
  Matrix c(p.field(), nn, nn);
  for (int i = 1; i < nn; ++i) c.at(i, i - 1) = Scalar::one(p.field());
  for (int i = 0; i < nn; ++i) c.at(i, nn - 1) = -q.coeff(i);
  return c;
}

NodalTriple band_to_triple(const BandDescriptor& b) {
  const Field& f = b.field();
  int n = b.n, r = b.laps(), mk = b.m * b.p.degree();
  int total = r * mk;
  NodalTriple t(f, n);
  std::vector<std::vector<int>> lap_rows;
  for (int ci = 0; ci < n; ++ci) {
    std::vector<int> values;
    for (int lap = 0; lap < r; ++lap) values.push_back(b.d[static_cast<size_t>(ci + lap * n)]);
    lap_rows.push_back(substrip_rows(values, mk));
    t.comps().push_back(NodalComponent{sorted_degrees(values, mk), Matrix(f, total, total),
                                       Matrix(f, total, total)});
  }
  t.node_cols().assign(static_cast<size_t>(n), total);
  // walk the unrolled cyclic word; the crossing into position q lands in
  // column strip lap(q), with the Frobenius block at the wrap
  int len = r * n;
  for (int q = 1; q <= len; ++q) {
    int ci = (q - 1) % n, lap = (q - 1) / n;
    paste_identity(t.comps()[static_cast<size_t>(ci)].at_zero,
                   lap_rows[static_cast<size_t>(ci)][static_cast<size_t>(lap)], lap * mk, mk);
    int qe = q == 1 ? len : q - 1;
    int cie = (qe - 1) % n, lape = (qe - 1) / n;
    Matrix& exit = t.comps()[static_cast<size_t>(cie)].at_infty;
    int r0 = lap_rows[static_cast<size_t>(cie)][static_cast<size_t>(lape)];
    if (q == 1)
      exit.paste(r0, lap * mk, frobenius_block(b.p, b.m));
    else
      paste_identity(exit, r0, lap * mk, mk);
  }
  t.validate();
  return t;
}

NodalTriple string_to_triple(const StringDescriptor& sd) {
  const Field& f = sd.field();
  int n = sd.n, s = static_cast<int>(sd.d.size());
  NodalTriple t(f, n);
  // rows: letters grouped per component, sorted by (value, occurrence)
  std::vector<std::vector<int>> comp_letters(static_cast<size_t>(n));
  for (int j = 0; j < s; ++j)
    comp_letters[static_cast<size_t>((sd.f - 1 + j) % n)].push_back(j);
  std::vector<int> letter_row(static_cast<size_t>(s));
  std::vector<std::vector<int>> comp_degs(static_cast<size_t>(n));
  for (int ci = 0; ci < n; ++ci) {
    std::vector<int> values;
    for (int j : comp_letters[static_cast<size_t>(ci)]) values.push_back(sd.d[static_cast<size_t>(j)]);
    std::vector<int> rows = substrip_rows(values, 1);
    for (size_t k = 0; k < rows.size(); ++k)
      letter_row[static_cast<size_t>(comp_letters[static_cast<size_t>(ci)][k])] = rows[k];
    comp_degs[static_cast<size_t>(ci)] = sorted_degrees(values, 1);
  }
  // crossings q = 1..s+1 at node (f-1+q-1) mod n, column index (q-1)/n
  std::vector<int> node_cols(static_cast<size_t>(n), 0);
  for (int q = 1; q <= s + 1; ++q) ++node_cols[static_cast<size_t>((sd.f - 1 + q - 1) % n)];
  for (int ci = 0; ci < n; ++ci) {
    int rows = static_cast<int>(comp_degs[static_cast<size_t>(ci)].size());
    t.comps().push_back(
        NodalComponent{comp_degs[static_cast<size_t>(ci)],
                       Matrix(f, rows, node_cols[static_cast<size_t>(ci)]),
                       Matrix(f, rows, node_cols[static_cast<size_t>((ci + 1) % n)])});
  }
  t.node_cols() = node_cols;
  for (int q = 1; q <= s + 1; ++q) {
    int col = (q - 1) / n;
    if (q <= s) {
      int ci = (sd.f - 1 + q - 1) % n;
      t.comps()[static_cast<size_t>(ci)].at_zero.at(letter_row[static_cast<size_t>(q - 1)], col) =
          Scalar::one(f);
    }
    if (q >= 2) {
      int cie = (sd.f - 1 + q - 2) % n;
      t.comps()[static_cast<size_t>(cie)].at_infty.at(letter_row[static_cast<size_t>(q - 2)], col) =
          Scalar::one(f);
    }
  }
  t.validate();
  return t;
}

NodalTriple descriptor_to_triple(const Descriptor& x) {
  if (std::holds_alternative<BandDescriptor>(x)) return band_to_triple(std::get<BandDescriptor>(x));
  return string_to_triple(std::get<StringDescriptor>(x));
}

NodalTriple structure_triple(const Field& f, int n) {
  return band_to_triple(unipotent_band(f, n, 1));
}

// ---------------------------------------------------------------------------
// Hom systems
// ---------------------------------------------------------------------------

namespace {

// Unknown layout for Hom((F1,M1,i1) -> (F2,M2,i2)) over a cycle.
// A form entry of degree delta = deg2 - deg1 >= 0 owns delta+1 coefficients;
// its value at zero is coefficient 0, at infinity coefficient delta.
struct NodalHom {
  long unknowns = 0;
  // per component: offset table indexed r2 * rows1 + r1; -1 when delta < 0
  std::vector<std::vector<long>> fofs;
  std::vector<long> node_ofs;  // f at node v: N2 x N1 entries, row-major
  Matrix sys;

  NodalHom(const NodalTriple& a, const NodalTriple& b) : sys(a.field(), 0, 0) {
    if (a.field() != b.field()) fail("field-mismatch", "Hom between different base fields");
    if (a.n() != b.n()) fail("invalid-argument", "Hom needs triples over the same cycle");
    int n = a.n();
    long u = 0;
    fofs.resize(static_cast<size_t>(n));
    for (int ci = 0; ci < n; ++ci) {
      const auto& c1 = a.comps()[static_cast<size_t>(ci)];
      const auto& c2 = b.comps()[static_cast<size_t>(ci)];
      auto rows1 = static_cast<long>(c1.row_degrees.size());
      auto rows2 = static_cast<long>(c2.row_degrees.size());
      fofs[static_cast<size_t>(ci)].assign(static_cast<size_t>(rows1 * rows2), -1);
      for (long r2 = 0; r2 < rows2; ++r2)
        for (long r1 = 0; r1 < rows1; ++r1) {
          int delta = c2.row_degrees[static_cast<size_t>(r2)] - c1.row_degrees[static_cast<size_t>(r1)];
          if (delta < 0) continue;
          fofs[static_cast<size_t>(ci)][static_cast<size_t>(r2 * rows1 + r1)] = u;
          u += delta + 1;
        }
    }
    node_ofs.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      node_ofs[static_cast<size_t>(v)] = u;
      u += static_cast<long>(a.node_cols()[static_cast<size_t>(v)]) *
           b.node_cols()[static_cast<size_t>(v)];
    }
    unknowns = u;

    long eqs = 0;
    for (int ci = 0; ci < n; ++ci) {
      auto rows2 = static_cast<long>(b.comps()[static_cast<size_t>(ci)].row_degrees.size());
      eqs += rows2 * a.node_cols()[static_cast<size_t>(ci)];
      eqs += rows2 * a.node_cols()[static_cast<size_t>((ci + 1) % n)];
    }
    sys = Matrix(a.field(), static_cast<int>(eqs), static_cast<int>(u));

    long eq = 0;
    for (int ci = 0; ci < n; ++ci) {
      const auto& c1 = a.comps()[static_cast<size_t>(ci)];
      const auto& c2 = b.comps()[static_cast<size_t>(ci)];
      auto rows1 = static_cast<long>(c1.row_degrees.size());
      auto rows2 = static_cast<long>(c2.row_degrees.size());
      for (int side = 0; side < 2; ++side) {
        int v = side == 0 ? ci : (ci + 1) % a.n();
        const Matrix& g1 = side == 0 ? c1.at_zero : c1.at_infty;
        const Matrix& g2 = side == 0 ? c2.at_zero : c2.at_infty;
        int n1 = a.node_cols()[static_cast<size_t>(v)];
        int n2 = b.node_cols()[static_cast<size_t>(v)];
        for (long r2 = 0; r2 < rows2; ++r2)
          for (int k1 = 0; k1 < n1; ++k1, ++eq) {
            // sum_r1 Fbar[r2][r1] g1[r1][k1] - sum_k2 g2[r2][k2] f[k2][k1] = 0
            for (long r1 = 0; r1 < rows1; ++r1) {
              long ofs = fofs[static_cast<size_t>(ci)][static_cast<size_t>(r2 * rows1 + r1)];
              if (ofs < 0) continue;
              int delta = c2.row_degrees[static_cast<size_t>(r2)] -
                          c1.row_degrees[static_cast<size_t>(r1)];
              long slot = side == 0 ? ofs : ofs + delta;
              sys.at(static_cast<int>(eq), static_cast<int>(slot)) +=
                  g1.at(static_cast<int>(r1), k1);
            }
            for (int k2 = 0; k2 < n2; ++k2) {
              long slot = node_ofs[static_cast<size_t>(v)] + static_cast<long>(k2) * n1 + k1;
              sys.at(static_cast<int>(eq), static_cast<int>(slot)) -=
                  g2.at(static_cast<int>(r2), k2);
            }
          }
      }
    }
  }
};

// Unknown layout for Hom over the cuspidal cubic. Only the value and the
// z0-derivative at (0:1) of each form enter the constraints.
struct CuspHom {
  long unknowns = 0;
  std::vector<long> fofs;  // r2 * rows1 + r1 -> offset; -1 when delta < 0
  long node_ofs = 0;
  Matrix sys;

  CuspHom(const CuspidalTriple& a, const CuspidalTriple& b) : sys(a.field, 0, 0) {
    if (a.field != b.field) fail("field-mismatch", "Hom between different base fields");
    auto rows1 = static_cast<long>(a.row_degrees.size());
    auto rows2 = static_cast<long>(b.row_degrees.size());
    long u = 0;
    fofs.assign(static_cast<size_t>(rows1 * rows2), -1);
    for (long r2 = 0; r2 < rows2; ++r2)
      for (long r1 = 0; r1 < rows1; ++r1) {
        int delta = b.row_degrees[static_cast<size_t>(r2)] - a.row_degrees[static_cast<size_t>(r1)];
        if (delta < 0) continue;
        fofs[static_cast<size_t>(r2 * rows1 + r1)] = u;
        u += delta + 1;
      }
    node_ofs = u;
    u += static_cast<long>(a.i0.cols()) * b.i0.cols();
    unknowns = u;

    int n1 = a.i0.cols(), n2 = b.i0.cols();
    sys = Matrix(a.field, static_cast<int>(2 * rows2 * n1), static_cast<int>(u));
    long eq = 0;
    for (int part = 0; part < 2; ++part) {
      // part 0: F(0) i0_a = i0_b f
      // part 1: dF i0_a + F(0) ieps_a = ieps_b f
      for (long r2 = 0; r2 < rows2; ++r2)
        for (int k1 = 0; k1 < n1; ++k1, ++eq) {
          for (long r1 = 0; r1 < rows1; ++r1) {
            long ofs = fofs[static_cast<size_t>(r2 * rows1 + r1)];
            if (ofs < 0) continue;
            int delta = b.row_degrees[static_cast<size_t>(r2)] -
                        a.row_degrees[static_cast<size_t>(r1)];
            if (part == 0) {
              sys.at(static_cast<int>(eq), static_cast<int>(ofs)) +=
                  a.i0.at(static_cast<int>(r1), k1);
            } else {
              if (delta >= 1)
                sys.at(static_cast<int>(eq), static_cast<int>(ofs + 1)) +=
                    a.i0.at(static_cast<int>(r1), k1);
              sys.at(static_cast<int>(eq), static_cast<int>(ofs)) +=
                  a.ieps.at(static_cast<int>(r1), k1);
            }
          }
          const Matrix& g2 = part == 0 ? b.i0 : b.ieps;
          for (int k2 = 0; k2 < n2; ++k2) {
            long slot = node_ofs + static_cast<long>(k2) * n1 + k1;
            sys.at(static_cast<int>(eq), static_cast<int>(slot)) -=
                g2.at(static_cast<int>(r2), k2);
          }
        }
    }
  }
};

std::vector<Scalar> combine(const std::vector<std::vector<Scalar>>& basis,
                            const std::vector<Scalar>& coefs, const Field& f, long unknowns) {
  std::vector<Scalar> x(static_cast<size_t>(unknowns), Scalar::zero(f));
  for (size_t k = 0; k < basis.size(); ++k) {
    if (coefs[k].is_zero()) continue;
    for (size_t i = 0; i < x.size(); ++i) x[i] += coefs[k] * basis[k][i];
  }
  return x;
}

struct Block {
  long size_ = 0;
  std::vector<long> slots_;  // size_ x size_, row-major, slots into x
};

// invertibility of the morphism encoded by the solution vector x:
// all equal-degree diagonal blocks of F and every node matrix f invertible
bool solution_invertible(const Field& field, const std::vector<Block>& deg_blocks,
                         const std::vector<Block>& node_blocks, const std::vector<Scalar>& x) {
  auto check = [&](const Block& blk) {
    int sz = static_cast<int>(blk.size_);
    if (sz == 0) return true;
    Matrix b(field, sz, sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j)
        b.at(i, j) = x[static_cast<size_t>(blk.slots_[static_cast<size_t>(i) * sz + j])];
    return !b.det().is_zero();
  };
  for (const auto& blk : deg_blocks)
    if (!check(blk)) return false;
  for (const auto& blk : node_blocks)
    if (!check(blk)) return false;
  return true;
}

// shared randomized search for an invertible morphism
Tristate search_invertible(const Field& field, long dim, const std::vector<std::vector<Scalar>>& basis,
                           const std::vector<Block>& deg_blocks, const std::vector<Block>& node_blocks,
                           long unknowns, std::uint64_t seed) {
  if (dim == 0) return Tristate::no;
  if (field.is_prime_field()) {
    // exhaustive search when the solution space is small enough
    double total = 1;
    for (long i = 0; i < dim && total < 65536.0; ++i) total *= static_cast<double>(field.characteristic());
    if (total <= 65536.0) {
      std::vector<std::uint64_t> ctr(static_cast<size_t>(dim), 0);
      while (true) {
        bool nonzero = false;
        for (auto c : ctr) nonzero |= c != 0;
        if (nonzero) {
          std::vector<Scalar> coefs;
          coefs.reserve(ctr.size());
          for (auto c : ctr) coefs.emplace_back(field, static_cast<long>(c));
          auto x = combine(basis, coefs, field, unknowns);
          if (solution_invertible(field, deg_blocks, node_blocks, x)) return Tristate::yes;
        }
        size_t pos = 0;
        while (pos < ctr.size()) {
          if (++ctr[pos] < field.characteristic()) break;
          ctr[pos] = 0;
          ++pos;
        }
        if (pos == ctr.size()) return Tristate::no;
      }
    }
  }
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 17);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Scalar> coefs;
    bool nonzero = false;
    for (long k = 0; k < dim; ++k) {
      long c = field.is_prime_field()
                   ? static_cast<long>(rng() % field.characteristic())
                   : small(rng);
      nonzero |= c != 0;
      coefs.emplace_back(field, c);
    }
    if (!nonzero) {
      --attempt;
      continue;
    }
    auto x = combine(basis, coefs, field, unknowns);
    if (solution_invertible(field, deg_blocks, node_blocks, x)) return Tristate::yes;
  }
  return Tristate::inconclusive;
}

}  // namespace

long hom_dim(const NodalTriple& a, const NodalTriple& b) {
  NodalHom h(a, b);
  return h.unknowns - h.sys.rank();
}

long hom_dim(const CuspidalTriple& a, const CuspidalTriple& b) {
  CuspHom h(a, b);
  return h.unknowns - h.sys.rank();
}

Cohomology cohomology(const NodalTriple& t) {
  const Field& f = t.field();
  int n = t.n();
  // unknowns: monomial coefficients of global sections plus the module M
  long u = 0;
  std::vector<std::vector<long>> sec_ofs(static_cast<size_t>(n));
  for (int ci = 0; ci < n; ++ci) {
    const auto& c = t.comps()[static_cast<size_t>(ci)];
    sec_ofs[static_cast<size_t>(ci)].resize(c.row_degrees.size(), -1);
    for (size_t r = 0; r < c.row_degrees.size(); ++r) {
      int d = c.row_degrees[r];
      if (d < 0) continue;
      sec_ofs[static_cast<size_t>(ci)][r] = u;
      u += d + 1;
    }
  }
  std::vector<long> m_ofs(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    m_ofs[static_cast<size_t>(v)] = u;
    u += t.node_cols()[static_cast<size_t>(v)];
  }
  long eqs = 0;
  for (const auto& c : t.comps()) eqs += 2 * static_cast<long>(c.row_degrees.size());
  Matrix sys(f, static_cast<int>(eqs), static_cast<int>(u));
  long eq = 0;
  for (int ci = 0; ci < n; ++ci) {
    const auto& c = t.comps()[static_cast<size_t>(ci)];
    for (int side = 0; side < 2; ++side) {
      int v = side == 0 ? ci : (ci + 1) % n;
      const Matrix& g = side == 0 ? c.at_zero : c.at_infty;
      for (size_t r = 0; r < c.row_degrees.size(); ++r, ++eq) {
        long so = sec_ofs[static_cast<size_t>(ci)][r];
        if (so >= 0) {
          int d = c.row_degrees[r];
          long slot = side == 0 ? so : so + d;
          sys.at(static_cast<int>(eq), static_cast<int>(slot)) += Scalar::one(f);
        }
        for (int k = 0; k < g.cols(); ++k)
          sys.at(static_cast<int>(eq), static_cast<int>(m_ofs[static_cast<size_t>(v)] + k)) -=
              g.at(static_cast<int>(r), k);
      }
    }
  }
  long h0 = u - sys.rank();
  long h1 = h0 - t.chi();
  if (h1 < 0) fail("internal", "negative h1 in cohomology oracle");
  return {h0, h1};
}

Cohomology cohomology(const CuspidalTriple& t) {
  const Field& f = t.field;
  long u = 0;
  std::vector<long> sec_ofs(t.row_degrees.size(), -1);
  for (size_t r = 0; r < t.row_degrees.size(); ++r) {
    if (t.row_degrees[r] < 0) continue;
    sec_ofs[r] = u;
    u += t.row_degrees[r] + 1;
  }
  long m_ofs = u;
  u += t.i0.cols();
  auto rows = static_cast<long>(t.row_degrees.size());
  Matrix sys(f, static_cast<int>(2 * rows), static_cast<int>(u));
  long eq = 0;
  for (int part = 0; part < 2; ++part) {
    const Matrix& g = part == 0 ? t.i0 : t.ieps;
    for (long r = 0; r < rows; ++r, ++eq) {
      long so = sec_ofs[static_cast<size_t>(r)];
      if (so >= 0) {
        int d = t.row_degrees[static_cast<size_t>(r)];
        if (part == 0)
          sys.at(static_cast<int>(eq), static_cast<int>(so)) += Scalar::one(f);
        else if (d >= 1)
          sys.at(static_cast<int>(eq), static_cast<int>(so + 1)) += Scalar::one(f);
      }
      for (int k = 0; k < g.cols(); ++k)
        sys.at(static_cast<int>(eq), static_cast<int>(m_ofs + k)) -= g.at(static_cast<int>(r), k);
    }
  }
  long h0 = u - sys.rank();
  long h1 = h0 - t.chi();
  if (h1 < 0) fail("internal", "negative h1 in cuspidal cohomology");
  return {h0, h1};
}

NodalTriple direct_sum(const NodalTriple& a, const NodalTriple& b) {
  if (a.field() != b.field() || a.n() != b.n())
    fail("invalid-argument", "direct sum needs matching curve and field");
  NodalTriple t(a.field(), a.n());
  for (int ci = 0; ci < a.n(); ++ci) {
    const auto& c1 = a.comps()[static_cast<size_t>(ci)];
    const auto& c2 = b.comps()[static_cast<size_t>(ci)];
    std::vector<int> degs = c1.row_degrees;
    degs.insert(degs.end(), c2.row_degrees.begin(), c2.row_degrees.end());
    t.comps().push_back(NodalComponent{std::move(degs),
                                       Matrix::direct_sum(c1.at_zero, c2.at_zero),
                                       Matrix::direct_sum(c1.at_infty, c2.at_infty)});
  }
  for (int v = 0; v < a.n(); ++v)
    t.node_cols().push_back(a.node_cols()[static_cast<size_t>(v)] +
                            b.node_cols()[static_cast<size_t>(v)]);
  t.normalize_rows();
  t.validate();
  return t;
}

CuspidalTriple direct_sum(const CuspidalTriple& a, const CuspidalTriple& b) {
  std::vector<int> degs = a.row_degrees;
  degs.insert(degs.end(), b.row_degrees.begin(), b.row_degrees.end());
  Matrix i0 = Matrix::direct_sum(a.i0, b.i0);
  Matrix ie = Matrix::direct_sum(a.ieps, b.ieps);
  // re-sort rows ascending
  std::vector<int> idx(degs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int x, int y) { return degs[static_cast<size_t>(x)] < degs[static_cast<size_t>(y)]; });
  std::vector<int> sdegs(degs.size());
  Matrix si0(a.field, i0.rows(), i0.cols()), sie(a.field, ie.rows(), ie.cols());
  for (size_t r = 0; r < idx.size(); ++r) {
    sdegs[r] = degs[static_cast<size_t>(idx[r])];
    for (int j = 0; j < i0.cols(); ++j) {
      si0.at(static_cast<int>(r), j) = i0.at(idx[r], j);
      sie.at(static_cast<int>(r), j) = ie.at(idx[r], j);
    }
  }
  CuspidalTriple t(a.field, std::move(sdegs), std::move(si0), std::move(sie));
  t.validate();
  return t;
}

NodalTriple tensor_triples(const NodalTriple& a, const NodalTriple& b) {
  if (a.field() != b.field() || a.n() != b.n())
    fail("invalid-argument", "tensor needs matching curve and field");
  NodalTriple t(a.field(), a.n());
  for (int ci = 0; ci < a.n(); ++ci) {
    const auto& c1 = a.comps()[static_cast<size_t>(ci)];
    const auto& c2 = b.comps()[static_cast<size_t>(ci)];
    std::vector<int> degs;
    for (int d1 : c1.row_degrees)
      for (int d2 : c2.row_degrees) degs.push_back(d1 + d2);
    t.comps().push_back(NodalComponent{std::move(degs),
                                       Matrix::kronecker(c1.at_zero, c2.at_zero),
                                       Matrix::kronecker(c1.at_infty, c2.at_infty)});
  }
  for (int v = 0; v < a.n(); ++v)
    t.node_cols().push_back(a.node_cols()[static_cast<size_t>(v)] *
                            b.node_cols()[static_cast<size_t>(v)]);
  t.normalize_rows();
  t.validate();
  return t;
}

NodalTriple pullback_triple(const NodalTriple& t, int r) {
  if (r < 1) fail("invalid-argument", "covering degree must be positive");
  NodalTriple up(t.field(), t.n() * r);
  for (int j = 0; j < t.n() * r; ++j) {
    up.comps().push_back(t.comps()[static_cast<size_t>(j % t.n())]);
    up.node_cols().push_back(t.node_cols()[static_cast<size_t>(j % t.n())]);
  }
  up.validate();
  return up;
}

NodalTriple pushforward_triple(const NodalTriple& t, int r) {
  if (r < 1 || t.n() % r != 0) fail("invalid-argument", "covering degree must divide the cycle size");
  int n = t.n() / r;
  const Field& f = t.field();
  NodalTriple down(f, n);
  std::vector<int> node_cols(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < r; ++j) node_cols[static_cast<size_t>(v)] += t.node_cols()[static_cast<size_t>(v + j * n)];
  for (int ci = 0; ci < n; ++ci) {
    std::vector<int> degs;
    long rows = 0;
    for (int j = 0; j < r; ++j) {
      const auto& c = t.comps()[static_cast<size_t>(ci + j * n)];
      degs.insert(degs.end(), c.row_degrees.begin(), c.row_degrees.end());
      rows += static_cast<long>(c.row_degrees.size());
    }
    Matrix z(f, static_cast<int>(rows), node_cols[static_cast<size_t>(ci)]);
    Matrix fi(f, static_cast<int>(rows), node_cols[static_cast<size_t>((ci + 1) % n)]);
    long row0 = 0;
    // block j of node a_ci gathers the module at the preimage node ci + j*n
    std::vector<long> col0_zero(static_cast<size_t>(r) + 1, 0), col0_inf(static_cast<size_t>(r) + 1, 0);
    for (int j = 0; j < r; ++j) {
      col0_zero[static_cast<size_t>(j) + 1] =
          col0_zero[static_cast<size_t>(j)] + t.node_cols()[static_cast<size_t>(ci + j * n)];
      col0_inf[static_cast<size_t>(j) + 1] =
          col0_inf[static_cast<size_t>(j)] + t.node_cols()[static_cast<size_t>(((ci + 1) % n) + j * n)];
    }
    for (int j = 0; j < r; ++j) {
      const auto& c = t.comps()[static_cast<size_t>(ci + j * n)];
      z.paste(static_cast<int>(row0), static_cast<int>(col0_zero[static_cast<size_t>(j)]), c.at_zero);
      // the infinity side of component ci + j*n sits at node ci+1 + j*n,
      // except the wrap component whose node is the (j+1)-st preimage of a_1
      int jj = ci == n - 1 ? (j + 1) % r : j;
      fi.paste(static_cast<int>(row0), static_cast<int>(col0_inf[static_cast<size_t>(jj)]), c.at_infty);
      row0 += static_cast<long>(c.row_degrees.size());
    }
    down.comps().push_back(NodalComponent{std::move(degs), std::move(z), std::move(fi)});
  }
  down.node_cols() = node_cols;
  down.normalize_rows();
  down.validate();
  return down;
}

namespace {

std::vector<Block> nodal_degree_blocks(const NodalTriple& a, const NodalTriple& b,
                                       const NodalHom& h) {
  std::vector<Block> blocks;
  for (int ci = 0; ci < a.n(); ++ci) {
    const auto& d1 = a.comps()[static_cast<size_t>(ci)].row_degrees;
    const auto& d2 = b.comps()[static_cast<size_t>(ci)].row_degrees;
    std::vector<int> degs = d1;
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (int v : degs) {
      std::vector<long> r1s, r2s;
      for (size_t r = 0; r < d1.size(); ++r)
        if (d1[r] == v) r1s.push_back(static_cast<long>(r));
      for (size_t r = 0; r < d2.size(); ++r)
        if (d2[r] == v) r2s.push_back(static_cast<long>(r));
      Block blk;
      blk.size_ = static_cast<long>(r1s.size());
      for (long r2 : r2s)
        for (long r1 : r1s)
          blk.slots_.push_back(
              h.fofs[static_cast<size_t>(ci)]
                    [static_cast<size_t>(r2 * static_cast<long>(d1.size()) + r1)]);
      blocks.push_back(std::move(blk));
    }
  }
  return blocks;
}

std::vector<Block> nodal_node_blocks(const NodalTriple& a, const NodalHom& h) {
  std::vector<Block> blocks;
  for (int v = 0; v < a.n(); ++v) {
    int n1 = a.node_cols()[static_cast<size_t>(v)];
    Block blk;
    blk.size_ = n1;
    for (int k2 = 0; k2 < n1; ++k2)
      for (int k1 = 0; k1 < n1; ++k1)
        blk.slots_.push_back(h.node_ofs[static_cast<size_t>(v)] + static_cast<long>(k2) * n1 + k1);
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

}  // namespace

Tristate is_isomorphic(const NodalTriple& a, const NodalTriple& b, std::uint64_t seed) {
  if (a.field() != b.field()) fail("field-mismatch", "isomorphism test needs one base field");
  if (a.n() != b.n()) return Tristate::no;
  for (int ci = 0; ci < a.n(); ++ci) {
    auto d1 = a.comps()[static_cast<size_t>(ci)].row_degrees;
    auto d2 = b.comps()[static_cast<size_t>(ci)].row_degrees;
    if (d1 != d2) return Tristate::no;  // rows are kept sorted
  }
  if (a.node_cols() != b.node_cols()) return Tristate::no;
  long h12 = hom_dim(a, b), h21 = hom_dim(b, a), e1 = hom_dim(a, a), e2 = hom_dim(b, b);
  if (h12 != h21 || h12 != e1 || e1 != e2) return Tristate::no;
  NodalHom h(a, b);
  auto basis = h.sys.nullspace();
  auto deg_blocks = nodal_degree_blocks(a, b, h);
  auto node_blocks = nodal_node_blocks(a, h);
  return search_invertible(a.field(), static_cast<long>(basis.size()), basis, deg_blocks,
                           node_blocks, h.unknowns, seed);
}

Tristate is_isomorphic(const CuspidalTriple& a, const CuspidalTriple& b, std::uint64_t seed) {
  if (a.field != b.field) fail("field-mismatch", "isomorphism test needs one base field");
  if (a.row_degrees != b.row_degrees || a.i0.cols() != b.i0.cols()) return Tristate::no;
  long h12 = hom_dim(a, b), h21 = hom_dim(b, a), e1 = hom_dim(a, a), e2 = hom_dim(b, b);
  if (h12 != h21 || h12 != e1 || e1 != e2) return Tristate::no;
  CuspHom h(a, b);
  auto basis = h.sys.nullspace();
  std::vector<Block> deg_blocks;
  {
    std::vector<int> degs = a.row_degrees;
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (int v : degs) {
      std::vector<long> rs;
      for (size_t r = 0; r < a.row_degrees.size(); ++r)
        if (a.row_degrees[r] == v) rs.push_back(static_cast<long>(r));
      Block blk;
      blk.size_ = static_cast<long>(rs.size());
      for (long r2 : rs)
        for (long r1 : rs)
          blk.slots_.push_back(
              h.fofs[static_cast<size_t>(r2 * static_cast<long>(a.row_degrees.size()) + r1)]);
      deg_blocks.push_back(std::move(blk));
    }
  }
  std::vector<Block> node_blocks;
  {
    int n1 = a.i0.cols();
    Block blk;
    blk.size_ = n1;
    for (int k2 = 0; k2 < n1; ++k2)
      for (int k1 = 0; k1 < n1; ++k1)
        blk.slots_.push_back(h.node_ofs + static_cast<long>(k2) * n1 + k1);
    node_blocks.push_back(std::move(blk));
  }
  return search_invertible(a.field, static_cast<long>(basis.size()), basis, deg_blocks,
                           node_blocks, h.unknowns, seed);
}

}  // namespace g1
