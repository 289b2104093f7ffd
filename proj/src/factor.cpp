#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <tuple>

#include "genus1/poly.hpp"

namespace g1 {

namespace {

// ---------------------------------------------------------------------------
// prime field factorization: squarefree split + DDF + EDF
// ---------------------------------------------------------------------------

Poly poly_powmod(const Poly& base, const mpz_class& e, const Poly& mod) {
  const Field& f = base.field();
  Poly r = Poly::constant(Scalar::one(f));
  Poly b = Poly::divmod(base, mod).second;
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) r = Poly::divmod(r * b, mod).second;
    b = Poly::divmod(b * b, mod).second;
    n >>= 1;
  }
  return r;
}

std::uint64_t poly_hash(const Poly& f) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(f.degree());
  for (const auto& c : f.coeffs()) h = h * 1099511628211ull + c.residue();
  return h;
}

Poly random_poly(const Field& f, int max_deg, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  std::uniform_int_distribution<std::uint64_t> dist(0, f.characteristic() - 1);
  for (int i = 0; i <= max_deg; ++i) c.emplace_back(f, static_cast<long>(dist(rng) % f.characteristic()));
  return Poly(f, std::move(c));
}

// p-th root of a polynomial of the form g(t^p) over F_p (Frobenius fixes F_p).
Poly pth_root(const Poly& f) {
  const Field& k = f.field();
  auto p = static_cast<int>(k.characteristic());
  std::vector<Scalar> c;
  for (int i = 0; i <= f.degree(); i += p) c.push_back(f.coeff(i));
  return Poly(k, std::move(c));
}

void sqfree_fp(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  const Field& k = f.field();
  Poly df = f.derivative();
  if (df.is_zero()) {
    sqfree_fp(pth_root(f), mult * static_cast<int>(k.characteristic()), out);
    return;
  }
  Poly c = Poly::gcd(f, df);
  Poly w = Poly::divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = Poly::gcd(w, c);
    Poly z = Poly::divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
    w = std::move(y);
    c = Poly::divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) sqfree_fp(c, mult, out);
}

void edf(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& k = g.field();
  std::uint64_t p = k.characteristic();
  while (true) {
    Poly a = random_poly(k, g.degree() - 1, rng);
    if (a.degree() < 1) continue;
    Poly c = Poly::gcd(a, g);
    if (c.degree() == 0 || c.degree() == g.degree()) {
      Poly h(k);
      if (p != 2) {
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
        e = (e - 1) / 2;
        h = poly_powmod(a, e, g) - Poly::constant(Scalar::one(k));
      } else {
        // char 2: trace map T(a) = a + a^2 + ... + a^(2^(d-1))
        Poly t = Poly::divmod(a, g).second;
        h = t;
        for (int i = 1; i < d; ++i) {
          t = Poly::divmod(t * t, g).second;
          h = h + t;
        }
      }
      c = Poly::gcd(h, g);
      if (c.degree() == 0 || c.degree() == g.degree()) continue;
    }
    edf(c, d, rng, out);
    edf(Poly::divmod(g, c).first, d, rng, out);
    return;
  }
}

std::vector<std::pair<Poly, int>> factor_fp(const Poly& f) {
  std::vector<std::pair<Poly, int>> sq;
  sqfree_fp(f.monic(), 1, sq);
  std::mt19937_64 rng(poly_hash(f));
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [part, mult] : sq) {
    // distinct-degree split
    Poly g = part;
    const Field& k = g.field();
    Poly h = Poly(k, {Scalar::zero(k), Scalar::one(k)});  // t
    mpz_class p(std::to_string(k.characteristic()));
    int d = 0;
    while (g.degree() > 0 && g.degree() >= 2 * (d + 1)) {
      ++d;
      h = poly_powmod(h, p, g);
      Poly t = Poly(k, {Scalar::zero(k), Scalar::one(k)});
      Poly gd = Poly::gcd(h - t, g);
      if (gd.degree() > 0) {
        std::vector<Poly> irr;
        edf(gd, d, rng, irr);
        for (auto& q : irr) out.emplace_back(std::move(q), mult);
        g = Poly::divmod(g, gd).first;
        h = Poly::divmod(h, g).second;
      }
    }
    if (g.degree() > 0) out.emplace_back(g.monic(), mult);
  }
  return out;
}

// ---------------------------------------------------------------------------
// rational factorization: Zassenhaus (factor mod p, Hensel lift, recombine)
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // dense, ascending; trimmed

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division; returns false if not exact
bool zdiv_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
  if (b.empty()) return false;
  while (zdeg(r) >= zdeg(b)) {
    mpz_class c = r.back() / b.back();
    if (c * b.back() != r.back()) return false;
    int k = zdeg(r) - zdeg(b);
    q[static_cast<size_t>(k)] = c;
    for (size_t i = 0; i < b.size(); ++i) r[static_cast<size_t>(k) + i] -= c * b[i];
    ztrim(r);
    if (r.empty()) break;
    if (zdeg(r) < zdeg(b) && !r.empty()) return false;
  }
  return r.empty();
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// polynomials over Z/m with monic divisor support
struct ModCtx {
  mpz_class m;
  mpz_class red(const mpz_class& a) const {
    mpz_class r = a % m;
    if (r < 0) r += m;
    return r;
  }
  ZPoly red(const ZPoly& a) const {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = red(a[i]);
    ztrim(r);
    return r;
  }
  ZPoly add(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.size()) r[i] += a[i];
      if (i < b.size()) r[i] += b[i];
      r[i] = red(r[i]);
    }
    ztrim(r);
    return r;
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly nb = b;
    for (auto& c : nb) c = -c;
    return add(a, nb);
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const { return red(zmul(a, b)); }
  // division by monic b
  void divmod_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) const {
    r = a;
    q.clear();
    if (zdeg(r) >= zdeg(b)) q.assign(static_cast<size_t>(zdeg(r) - zdeg(b)) + 1, mpz_class(0));
    while (zdeg(r) >= zdeg(b)) {
      mpz_class c = r.back();
      int k = zdeg(r) - zdeg(b);
      q[static_cast<size_t>(k)] = c;
      for (size_t i = 0; i < b.size(); ++i)
        r[static_cast<size_t>(k) + i] = red(r[static_cast<size_t>(k) + i] - c * b[i]);
      ztrim(r);
    }
    ztrim(q);
  }
};

// one quadratic Hensel step: f == g*h (mod m), s*g + t*h == 1 (mod m),
// deg s < deg h, deg t < deg g, f, g, h monic; lifts everything to mod m^2
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
  ModCtx M{m * m};
  ZPoly e = M.sub(M.red(f), M.mul(g, h));
  ZPoly q, r;
  M.divmod_monic(M.mul(s, e), h, q, r);
  ZPoly g1 = M.add(g, M.add(M.mul(t, e), M.mul(q, g)));
  ZPoly h1 = M.add(h, r);
  ZPoly b = M.sub(M.add(M.mul(s, g1), M.mul(t, h1)), ZPoly{mpz_class(1)});
  ZPoly c, d;
  M.divmod_monic(M.mul(s, b), h1, c, d);
  ZPoly s1 = M.sub(s, d);
  ZPoly t1 = M.sub(M.sub(t, M.mul(t, b)), M.mul(c, g1));
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

// lifts a monic factorization f == prod(parts) (mod p) to mod p^(2^iters) via a factor tree
struct HenselNode {
  ZPoly prod;
  std::unique_ptr<HenselNode> left, right;
  ZPoly s, t;  // Bezout for (left.prod, right.prod)
  int lo = 0, hi = 0;
};

ZPoly to_zpoly_sym(const Poly& f, const mpz_class& p) {
  ZPoly r(static_cast<size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    mpz_class c(std::to_string(f.coeff(i).residue()));
    r[static_cast<size_t>(i)] = c;
  }
  (void)p;
  return r;
}

std::unique_ptr<HenselNode> build_tree(const std::vector<ZPoly>& leaves, int lo, int hi,
                                       const Field& fp, const mpz_class& p) {
  auto node = std::make_unique<HenselNode>();
  node->lo = lo;
  node->hi = hi;
  if (hi - lo == 1) {
    node->prod = leaves[static_cast<size_t>(lo)];
    return node;
  }
  int mid = (lo + hi) / 2;
  node->left = build_tree(leaves, lo, mid, fp, p);
  node->right = build_tree(leaves, mid, hi, fp, p);
  ModCtx M{p};
  node->prod = M.mul(node->left->prod, node->right->prod);
  // Bezout over F_p
  auto lift_poly = [&](const ZPoly& a) {
    std::vector<Scalar> c;
    c.reserve(a.size());
    for (const auto& x : a) c.emplace_back(fp, mpq_class(x));
    return Poly(fp, std::move(c));
  };
  auto [gg, u, v] = Poly::ext_gcd(lift_poly(node->left->prod), lift_poly(node->right->prod));
  if (gg.degree() != 0) fail("internal", "hensel tree factors not coprime");
  Scalar inv = gg.coeff(0).inverse();
  node->s = to_zpoly_sym(u * inv, p);
  node->t = to_zpoly_sym(v * inv, p);
  return node;
}

// target == product of this node's leaves (mod p^(2^steps)), monic
void lift_tree(HenselNode* node, const ZPoly& target, const mpz_class& p, int steps) {
  if (!node->left) {
    node->prod = target;
    return;
  }
  ZPoly g = node->left->prod, h = node->right->prod, s = node->s, t = node->t;
  mpz_class m = p;
  for (int i = 0; i < steps; ++i) {
    hensel_step(target, g, h, s, t, m);
    m = m * m;
  }
  lift_tree(node->left.get(), g, p, steps);
  lift_tree(node->right.get(), h, p, steps);
}

void collect_leaves(HenselNode* node, std::vector<ZPoly>& out) {
  if (!node->left) {
    out.push_back(node->prod);
    return;
  }
  collect_leaves(node->left.get(), out);
  collect_leaves(node->right.get(), out);
}

mpz_class mignotte_bound(const ZPoly& f) {
  mpz_class norm = 0;
  for (const auto& c : f) norm += abs(c);
  mpz_class b = 1;
  b <<= static_cast<unsigned>(zdeg(f) + 1);
  return b * norm;
}

ZPoly symmetric_range(const ZPoly& a, const mpz_class& m) {
  ZPoly r = a;
  mpz_class half = m / 2;
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(r);
  return r;
}

// factors a primitive squarefree integer polynomial of degree >= 1
std::vector<ZPoly> factor_z_squarefree(ZPoly f) {
  std::vector<ZPoly> result;
  if (zdeg(f) == 1) {
    result.push_back(f);
    return result;
  }
  if (zdeg(f) > 16)
    fail("unsupported", "rational factorization supported up to degree 16",
         "degree " + std::to_string(zdeg(f)));

  // choose a prime keeping f squarefree with few modular factors
  static const unsigned long primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                         37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
  std::vector<std::pair<Poly, int>> best;
  mpz_class best_p = 0;
  int tried = 0;
  for (unsigned long pl : primes) {
    mpz_class p(static_cast<long>(pl));
    if (f.back() % p == 0) continue;
    Field fp = Field::prime(pl);
    std::vector<Scalar> c;
    for (const auto& x : f) c.emplace_back(fp, mpq_class(x));
    Poly fbar(fp, std::move(c));
    if (Poly::gcd(fbar, fbar.derivative()).degree() != 0) continue;
    auto fac = factor_fp(fbar);
    if (best.empty() || fac.size() < best.size()) {
      best = fac;
      best_p = p;
    }
    if (++tried >= 4 || best.size() == 1) break;
  }
  if (best.empty()) fail("internal", "no usable prime for rational factorization");
  if (best.size() == 1) {
    result.push_back(f);
    return result;
  }

  // Hensel lift to above twice the Mignotte bound
  mpz_class bound = 2 * mignotte_bound(f) * abs(f.back());
  mpz_class pk = best_p;
  int steps = 0;
  while (pk <= bound) {
    pk = pk * pk;
    ++steps;
  }
  Field fp = Field::prime(best_p.get_ui());
  std::vector<ZPoly> leaves;
  for (const auto& [g, mult] : best) {
    (void)mult;  // squarefree: all 1
    leaves.push_back(to_zpoly_sym(g, best_p));
  }
  auto tree = build_tree(leaves, 0, static_cast<int>(leaves.size()), fp, best_p);
  // root target: monic version of f mod p^K
  mpz_class pK = best_p;
  for (int i = 0; i < steps; ++i) pK *= pK;
  ModCtx MK{pK};
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), pK.get_mpz_t());
  ZPoly fmonic = f;
  for (auto& c : fmonic) c = MK.red(c * lc_inv);
  lift_tree(tree.get(), fmonic, best_p, steps);
  std::vector<ZPoly> lifted;
  collect_leaves(tree.get(), lifted);

  // recombination: try subsets of modular factors in increasing size
  std::vector<int> avail(lifted.size());
  for (size_t i = 0; i < avail.size(); ++i) avail[i] = static_cast<int>(i);
  ZPoly rem = f;
  size_t take = 1;
  while (!avail.empty() && 2 * take <= avail.size()) {
    bool found = false;
    std::vector<int> comb(take);
    for (size_t i = 0; i < take; ++i) comb[i] = static_cast<int>(i);
    while (true) {
      ZPoly cand{mpz_class(rem.back())};
      for (size_t i = 0; i < take; ++i)
        cand = MK.mul(cand, lifted[static_cast<size_t>(avail[static_cast<size_t>(comb[i])])]);
      cand = symmetric_range(cand, pK);
      mpz_class ct = zcontent(cand);
      if (ct != 0)
        for (auto& c : cand) c /= ct;
      ZPoly q;
      if (!cand.empty() && zdiv_exact(rem, cand, q)) {
        result.push_back(cand);
        rem = q;
        std::vector<int> navail;
        for (size_t i = 0, j = 0; i < avail.size(); ++i) {
          if (j < take && comb[j] == static_cast<int>(i)) {
            ++j;
            continue;
          }
          navail.push_back(avail[i]);
        }
        avail = std::move(navail);
        found = true;
        break;
      }
      int k = static_cast<int>(take) - 1;
      while (k >= 0 &&
             comb[static_cast<size_t>(k)] ==
                 static_cast<int>(avail.size() - take + static_cast<size_t>(k)))
        --k;
      if (k < 0) break;
      ++comb[static_cast<size_t>(k)];
      for (size_t i = static_cast<size_t>(k) + 1; i < take; ++i) comb[i] = comb[i - 1] + 1;
    }
    if (!found) ++take;
  }
  if (zdeg(rem) >= 1) result.push_back(rem);
  return result;
}

std::vector<std::pair<Poly, int>> factor_q(const Poly& f) {
  const Field& k = f.field();
  // Yun's squarefree decomposition (char 0)
  std::vector<std::pair<Poly, int>> parts;
  {
    Poly g = Poly::gcd(f, f.derivative());
    Poly w = Poly::divmod(f, g).first;
    int i = 1;
    while (w.degree() > 0) {
      Poly y = Poly::gcd(w, g);
      Poly z = Poly::divmod(w, y).first;
      if (z.degree() > 0) parts.emplace_back(z.monic(), i);
      w = std::move(y);
      g = Poly::divmod(g, w).first;
      ++i;
    }
  }
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [part, mult] : parts) {
    // to primitive integer polynomial
    mpz_class den = 1;
    for (int i = 0; i <= part.degree(); ++i)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), part.coeff(i).rational().get_den().get_mpz_t());
    ZPoly zp(static_cast<size_t>(part.degree()) + 1);
    for (int i = 0; i <= part.degree(); ++i) {
      mpq_class c = part.coeff(i).rational() * mpq_class(den);
      zp[static_cast<size_t>(i)] = c.get_num();
    }
    mpz_class ct = zcontent(zp);
    if (ct != 0)
      for (auto& c : zp) c /= ct;
    if (zp.back() < 0)
      for (auto& c : zp) c = -c;
    for (const auto& zf : factor_z_squarefree(zp)) {
      std::vector<Scalar> c;
      for (const auto& x : zf) c.emplace_back(k, mpq_class(x));
      out.emplace_back(Poly(k, std::move(c)).monic(), mult);
    }
  }
  return out;
}

}  // namespace

Factorization factor(const Poly& f) {
  if (f.is_zero()) fail("invalid-argument", "cannot factor the zero polynomial");
  Factorization r{f.leading(), {}};
  if (f.degree() == 0) return r;
  auto fac = f.field().is_rationals() ? factor_q(f) : factor_fp(f);
  // merge equal factors, then sort canonically
  std::vector<std::pair<Poly, int>> merged;
  for (auto& [q, m] : fac) {
    bool hit = false;
    for (auto& [mq, mm] : merged) {
      if (mq == q) {
        mm += m;
        hit = true;
        break;
      }
    }
    if (!hit) merged.emplace_back(q, m);
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    int c = Poly::compare(a.first, b.first);
    return c < 0 || (c == 0 && a.second < b.second);
  });
  r.factors = std::move(merged);
  return r;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.degree() < 1)
    fail("invalid-argument", "irreducibility is defined for degree >= 1");
  if (f.degree() == 1) return true;
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace g1
