#include "g2rm/triangular.hpp"

#include <cassert>

#include "g2rm/errors.hpp"

namespace g2rm {

TPoly tp_zero(int level) {
  TPoly t;
  t.level = level;
  return t;
}

TPoly tp_const(const FqField& K, int level, const mpz_class& v) {
  TPoly t;
  t.level = level;
  auto r = K.from_mpz(v);
  if (K.is_zero(r)) return t;
  if (level == 0) {
    t.coef.push_back(r);
  } else {
    t.kids.push_back(tp_const(K, level - 1, r));
  }
  return t;
}

TPoly tp_one(const FqField& K, int level) { return tp_const(K, level, 1); }

TPoly tp_var(const FqField& K, int level, int var) {
  assert(var <= level);
  TPoly t;
  t.level = level;
  if (level == 0) {
    t.coef = {K.zero(), K.one()};
    return t;
  }
  if (var == level) {
    t.kids.push_back(tp_zero(level - 1));
    t.kids.push_back(tp_one(K, level - 1));
  } else {
    t.kids.push_back(tp_var(K, level - 1, var));
  }
  return t;
}

TPoly tp_from_poly(const FqField& K, int level, const Poly<FqField>& p) {
  TPoly t;
  t.level = level;
  if (p.is_zero()) return t;
  if (level == 0) {
    t.coef = p.c;
  } else {
    t.kids.push_back(tp_from_poly(K, level - 1, p));
  }
  return t;
}

TPoly tp_embed(const TPoly& t, int level) {
  TPoly r = t;
  while (r.level < level) {
    TPoly w;
    w.level = r.level + 1;
    if (!r.is_zero()) w.kids.push_back(std::move(r));
    r = std::move(w);
  }
  return r;
}

void tp_normalize(TPoly& t) {
  if (t.level == 0) {
    while (!t.coef.empty() && mpz_sgn(t.coef.back().get_mpz_t()) == 0) t.coef.pop_back();
    return;
  }
  for (auto& k : t.kids) tp_normalize(k);
  while (!t.kids.empty() && t.kids.back().is_zero()) t.kids.pop_back();
}

bool tp_eq(const TPoly& a, const TPoly& b) {
  if (a.level != b.level) return false;
  if (a.level == 0) return a.coef == b.coef;
  if (a.kids.size() != b.kids.size()) return false;
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (!tp_eq(a.kids[i], b.kids[i])) return false;
  return true;
}

TPoly tp_add(const FqField& K, const TPoly& a, const TPoly& b) {
  assert(a.level == b.level);
  TPoly r;
  r.level = a.level;
  if (a.level == 0) {
    size_t n = std::max(a.coef.size(), b.coef.size());
    r.coef.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (i < a.coef.size() && i < b.coef.size())
        r.coef.push_back(K.add(a.coef[i], b.coef[i]));
      else if (i < a.coef.size())
        r.coef.push_back(a.coef[i]);
      else
        r.coef.push_back(b.coef[i]);
    }
  } else {
    size_t n = std::max(a.kids.size(), b.kids.size());
    r.kids.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (i < a.kids.size() && i < b.kids.size())
        r.kids.push_back(tp_add(K, a.kids[i], b.kids[i]));
      else if (i < a.kids.size())
        r.kids.push_back(a.kids[i]);
      else
        r.kids.push_back(b.kids[i]);
    }
  }
  tp_normalize(r);
  return r;
}

TPoly tp_neg(const FqField& K, const TPoly& a) {
  TPoly r = a;
  if (r.level == 0) {
    for (auto& c : r.coef) c = K.neg(c);
  } else {
    for (auto& k : r.kids) k = tp_neg(K, k);
  }
  return r;
}

TPoly tp_sub(const FqField& K, const TPoly& a, const TPoly& b) {
  return tp_add(K, a, tp_neg(K, b));
}

TPoly tp_scale(const FqField& K, const TPoly& a, const mpz_class& c) {
  auto cc = K.from_mpz(c);
  if (K.is_zero(cc)) return tp_zero(a.level);
  TPoly r = a;
  if (r.level == 0) {
    for (auto& x : r.coef) x = K.mul(x, cc);
  } else {
    for (auto& k : r.kids) k = tp_scale(K, k, cc);
  }
  tp_normalize(r);
  return r;
}

TPoly tp_mul(const FqField& K, const TPoly& a, const TPoly& b) {
  assert(a.level == b.level);
  TPoly r;
  r.level = a.level;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.level == 0) {
    r.coef = detail::kara_mul(K, a.coef.data(), a.coef.size(), b.coef.data(), b.coef.size());
  } else {
    r.kids.assign(a.kids.size() + b.kids.size() - 1, tp_zero(a.level - 1));
    for (size_t i = 0; i < a.kids.size(); ++i) {
      if (a.kids[i].is_zero()) continue;
      for (size_t j = 0; j < b.kids.size(); ++j) {
        if (b.kids[j].is_zero()) continue;
        r.kids[i + j] = tp_add(K, r.kids[i + j], tp_mul(K, a.kids[i], b.kids[j]));
      }
    }
  }
  tp_normalize(r);
  return r;
}

mpz_class tp_eval(const FqField& K, const TPoly& t, const std::vector<mpz_class>& pt) {
  if (t.is_zero()) return K.zero();
  if (t.level == 0) {
    Poly<FqField> p;
    p.c = t.coef;
    return poly_eval(K, p, pt[0]);
  }
  auto r = K.zero();
  const auto& x = pt[t.level];
  for (size_t i = t.kids.size(); i-- > 0;)
    r = K.add(K.mul(r, x), tp_eval(K, t.kids[i], pt));
  return r;
}

namespace {

// Reduction of t modulo the generators at levels <= t.level.
TPoly red(const FqField& K, const TriangularIdeal& I, TPoly t) {
  if (t.is_zero()) return t;
  if (t.level == 0) {
    Poly<FqField> p;
    p.c = std::move(t.coef);
    poly_normalize(K, p);
    p = I.level0().rem(K, p);
    t.coef = std::move(p.c);
    return t;
  }
  for (auto& kid : t.kids) kid = red(K, I, std::move(kid));
  tp_normalize(t);
  const TPoly& g = I.gen(t.level);
  const int dg = g.deg();
  while (t.deg() >= dg) {
    TPoly c = std::move(t.kids.back());
    t.kids.pop_back();
    if (!c.is_zero()) {
      const int k = static_cast<int>(t.kids.size()) - dg;
      for (int j = 0; j < dg; ++j) {
        if (g.kids[j].is_zero()) continue;
        t.kids[k + j] = tp_sub(K, t.kids[k + j], red(K, I, tp_mul(K, c, g.kids[j])));
      }
    }
    tp_normalize(t);
  }
  return t;
}

TPoly inv_level(const FqField& K, const TriangularIdeal& I, const TPoly& a);

// Division with remainder in R_{L-1}[x_L]; leading-coefficient inversions
// recurse (and may signal splits).
std::pair<TPoly, TPoly> divrem_level(const FqField& K, const TriangularIdeal& I, TPoly A,
                                     const TPoly& B) {
  const int L = A.level;
  TPoly q = tp_zero(L);
  if (A.deg() < B.deg()) return {q, A};
  const TPoly lci = inv_level(K, I, B.kids.back());
  const int db = B.deg();
  q.kids.assign(A.deg() - db + 1, tp_zero(L - 1));
  while (A.deg() >= db) {
    TPoly t = red(K, I, tp_mul(K, A.kids.back(), lci));
    const int k = A.deg() - db;
    if (!t.is_zero()) {
      q.kids[k] = t;
      for (int j = 0; j < db; ++j) {
        if (B.kids[j].is_zero()) continue;
        A.kids[k + j] = tp_sub(K, A.kids[k + j], red(K, I, tp_mul(K, t, B.kids[j])));
      }
    }
    A.kids.pop_back();
    tp_normalize(A);
    if (A.is_zero()) break;
  }
  tp_normalize(q);
  return {q, A};
}

TPoly inv_level(const FqField& K, const TriangularIdeal& I, const TPoly& a) {
  if (a.is_zero()) throw err_zero_inverse();
  const int L = a.level;
  if (L == 0) {
    Poly<FqField> ap, m, g, s, t;
    ap.c = a.coef;
    m.c = I.gen(0).coef;
    poly_xgcd(K, ap, m, g, s, t);
    if (g.deg() == 0) {
      TPoly r;
      r.level = 0;
      r.coef = I.level0().rem(K, s).c;
      return r;
    }
    TPoly f;
    f.level = 0;
    f.coef = g.c;
    throw IdealSplit{0, std::move(f)};
  }
  // Extended Euclid against the level generator; only the cofactor of `a`
  // is tracked (r_i = s_i * a mod gens[L]).
  TPoly r0 = I.gen(L), r1 = a;
  TPoly s0 = tp_zero(L), s1 = tp_one(K, L);
  while (!r1.is_zero()) {
    auto [q, r2] = divrem_level(K, I, r0, r1);
    TPoly s2 = red(K, I, tp_sub(K, s0, tp_mul(K, q, s1)));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.deg() == 0) {
    TPoly c = r0.kids[0];
    TPoly cinv = inv_level(K, I, c);
    TPoly ext = tp_embed(cinv, L);
    return red(K, I, tp_mul(K, s0, ext));
  }
  // Nontrivial common factor: monicize and signal the split.
  TPoly li = inv_level(K, I, r0.kids.back());
  for (auto& kid : r0.kids) kid = red(K, I, tp_mul(K, kid, li));
  tp_normalize(r0);
  throw IdealSplit{L, std::move(r0)};
}

}  // namespace

TriangularIdeal::TriangularIdeal(const FqField& K, std::vector<TPoly> gens)
    : gens_(std::move(gens)) {
  assert(!gens_.empty());
  for (size_t i = 0; i < gens_.size(); ++i) {
    assert(gens_[i].level == static_cast<int>(i));
    tp_normalize(gens_[i]);
    assert(!gens_[i].is_zero() && gens_[i].deg() >= 1);
  }
  Poly<FqField> t0;
  t0.c = gens_[0].coef;
  pm0_ = PreparedModulus<FqField>(K, t0, 2 * t0.deg());
  // Canonicalize: reduce each generator's coefficients by the lower levels.
  for (size_t i = 1; i < gens_.size(); ++i) {
    for (auto& kid : gens_[i].kids) kid = red(K, *this, std::move(kid));
    tp_normalize(gens_[i]);
    // Monic in the main variable.
    assert(gens_[i].deg() >= 1 && tp_eq(gens_[i].kids.back(), tp_one(K, gens_[i].level - 1)));
  }
}

unsigned long TriangularIdeal::quotient_degree() const {
  unsigned long d = 1;
  for (const auto& g : gens_) d *= static_cast<unsigned long>(g.deg());
  return d;
}

TPoly tq_reduce(const FqField& K, const TriangularIdeal& I, const TPoly& t) {
  return red(K, I, t);
}

TPoly tq_inv(const FqField& K, const TriangularIdeal& I, const TPoly& a) {
  return inv_level(K, I, a);
}

InvertOutcome invert_or_split(const FqField& K, const TriangularIdeal& I, const TPoly& a) {
  InvertOutcome out;
  TPoly ar = tq_reduce(K, I, a);
  if (ar.is_zero()) {
    // Zero residue: full split signal, the "factor" is the generator itself.
    out.split_level = I.nvars() - 1;
    out.split_factor = I.gen(I.nvars() - 1);
    return out;
  }
  try {
    out.inverse = tq_inv(K, I, ar);
    out.invertible = true;
  } catch (const IdealSplit& s) {
    out.split_level = s.level;
    out.split_factor = s.factor;
  }
  return out;
}

std::pair<TriangularIdeal, TriangularIdeal> split_ideal(const FqField& K,
                                                        const TriangularIdeal& I, int level,
                                                        const TPoly& factor) {
  const TPoly& g = I.gen(level);
  if (factor.deg() < 1 || factor.deg() >= g.deg())
    throw ComputeError("InternalError", "trivial split factor");
  // Synthetic division g / factor (factor monic): quotient and remainder.
  TPoly rem = g;
  TPoly quo = tp_zero(level);
  const int df = factor.deg();
  if (level == 0) {
    Poly<FqField> gp, fp;
    gp.c = g.coef;
    fp.c = factor.coef;
    auto [q, r] = poly_divrem(K, gp, fp);
    if (!r.is_zero()) throw ComputeError("InternalError", "split factor does not divide");
    quo.coef = q.c;
  } else {
    quo.kids.assign(g.deg() - df + 1, tp_zero(level - 1));
    while (rem.deg() >= df) {
      TPoly c = rem.kids.back();
      rem.kids.pop_back();
      if (!c.is_zero()) {
        const int k = static_cast<int>(rem.kids.size()) - df;
        quo.kids[k] = c;
        for (int j = 0; j < df; ++j) {
          if (factor.kids[j].is_zero()) continue;
          rem.kids[k + j] = tp_sub(K, rem.kids[k + j], red(K, I, tp_mul(K, c, factor.kids[j])));
        }
      }
      tp_normalize(rem);
      if (rem.is_zero()) break;
    }
    tp_normalize(rem);
    if (!rem.is_zero() && rem.deg() >= df)
      throw ComputeError("InternalError", "split division stalled");
    if (!rem.is_zero()) {
      // Remainder should reduce to zero modulo the lower ideal.
      TPoly check = red(K, I, rem);
      if (!check.is_zero()) throw ComputeError("InternalError", "split factor does not divide");
    }
    tp_normalize(quo);
  }

  std::vector<TPoly> g1, g2;
  for (int i = 0; i < I.nvars(); ++i) {
    g1.push_back(I.gen(i));
    g2.push_back(I.gen(i));
  }
  g1[level] = factor;
  g2[level] = quo;
  return {TriangularIdeal(K, std::move(g1)), TriangularIdeal(K, std::move(g2))};
}

QuotField::Element QuotField::pow(const Element& a, const mpz_class& e) const {
  Element r = one();
  if (e == 0) return r;
  assert(e > 0);
  const size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  Element base = a;
  for (size_t i = nbits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, base);
  }
  return r;
}

}  // namespace g2rm
