#include "g2rm/bivariate.hpp"

#include "g2rm/errors.hpp"

namespace g2rm {

void bivar_normalize(const FqField& K, Bivar& a) {
  for (auto& p : a.c) poly_normalize(K, p);
  while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

Bivar bivar_outer(const FqField& K, const Poly<FqField>& a, const Poly<FqField>& b) {
  Bivar r;
  r.c.reserve(b.c.size());
  for (const auto& bj : b.c) r.c.push_back(poly_scale(K, a, bj));
  bivar_normalize(K, r);
  return r;
}

Bivar bivar_add(const FqField& K, const Bivar& a, const Bivar& b) {
  Bivar r;
  const size_t n = std::max(a.c.size(), b.c.size());
  r.c.resize(n);
  for (size_t j = 0; j < n; ++j) {
    if (j < a.c.size() && j < b.c.size())
      r.c[j] = poly_add(K, a.c[j], b.c[j]);
    else if (j < a.c.size())
      r.c[j] = a.c[j];
    else
      r.c[j] = b.c[j];
  }
  bivar_normalize(K, r);
  return r;
}

Bivar bivar_sub(const FqField& K, const Bivar& a, const Bivar& b) {
  Bivar r;
  const size_t n = std::max(a.c.size(), b.c.size());
  r.c.resize(n);
  for (size_t j = 0; j < n; ++j) {
    if (j < a.c.size() && j < b.c.size())
      r.c[j] = poly_sub(K, a.c[j], b.c[j]);
    else if (j < a.c.size())
      r.c[j] = a.c[j];
    else
      r.c[j] = poly_neg(K, b.c[j]);
  }
  bivar_normalize(K, r);
  return r;
}

Bivar bivar_transpose(const FqField& K, const Bivar& a) {
  Bivar r;
  const int d1 = a.deg1();
  r.c.resize(d1 + 1);
  for (int i = 0; i <= d1; ++i) {
    auto& pi = r.c[i];
    pi.c.assign(a.c.size(), K.zero());
    for (size_t j = 0; j < a.c.size(); ++j)
      if (i <= a.c[j].deg()) pi.c[j] = a.c[j].c[i];
    poly_normalize(K, pi);
  }
  bivar_normalize(K, r);
  return r;
}

Poly<FqField> bivar_eval_x1(const FqField& K, const Bivar& a, const mpz_class& t) {
  Poly<FqField> r;
  r.c.reserve(a.c.size());
  for (const auto& p : a.c) r.c.push_back(poly_eval(K, p, t));
  poly_normalize(K, r);
  return r;
}

mpz_class bivar_eval(const FqField& K, const Bivar& a, const mpz_class& x1,
                     const mpz_class& x2) {
  return poly_eval(K, bivar_eval_x1(K, a, x1), x2);
}

Bivar bivar_div_x1_minus_x2(const FqField& K, const Bivar& a) {
  // Synthetic division by (x2 - x1) over F_q[x1], then negate.
  const int d = a.deg2();
  if (d < 1) {
    if (!a.is_zero()) throw err_interpolation_failure("division by (x1-x2) of nonzero constant");
    return Bivar{};
  }
  Bivar q;
  q.c.resize(d);
  Poly<FqField> carry = a.c[d];
  Poly<FqField> x1poly = poly_xpow(K, 1);
  for (int j = d - 1; j >= 0; --j) {
    q.c[j] = carry;
    carry = poly_add(K, (j < static_cast<int>(a.c.size())) ? a.c[j] : Poly<FqField>{},
                     poly_mul(K, x1poly, carry));
  }
  if (!carry.is_zero())
    throw err_interpolation_failure("inexact division by (x1-x2): input not antisymmetric");
  for (auto& p : q.c) p = poly_neg(K, p);
  bivar_normalize(K, q);
  return q;
}

Bivar bivar_symmetric_reduce(const FqField& K, const Bivar& a) {
  const int d1 = a.deg1();
  const int d2 = a.deg2();
  const int d = std::max(d1, d2);
  // Power sums pi_k(s,p): pi_0 = 2, pi_1 = s, pi_k = s*pi_{k-1} - p*pi_{k-2}.
  // Stored with c[j] = coefficient of p^j as a polynomial in s.
  std::vector<Bivar> pi(d + 1);
  {
    Bivar p0;
    p0.c.push_back(poly_from_ints(K, {2}));
    pi[0] = p0;
    if (d >= 1) {
      Bivar p1;
      p1.c.push_back(poly_xpow(K, 1));
      pi[1] = p1;
    }
    Poly<FqField> s = poly_xpow(K, 1);
    for (int k = 2; k <= d; ++k) {
      Bivar t;
      t.c.resize(std::max(pi[k - 1].c.size(), pi[k - 2].c.size() + 1));
      for (size_t j = 0; j < pi[k - 1].c.size(); ++j) t.c[j] = poly_mul(K, s, pi[k - 1].c[j]);
      for (size_t j = 0; j < pi[k - 2].c.size(); ++j)
        t.c[j + 1] = poly_sub(K, t.c[j + 1], pi[k - 2].c[j]);
      bivar_normalize(K, t);
      pi[k] = std::move(t);
    }
  }

  auto grid_at = [&](int i, int j) -> mpz_class {
    if (j >= static_cast<int>(a.c.size())) return K.zero();
    if (i > a.c[j].deg()) return K.zero();
    return a.c[j].c[i];
  };

  Bivar out;
  auto accumulate = [&](int pshift, const Bivar& pk, const mpz_class& scale) {
    if (K.is_zero(scale)) return;
    if (out.c.size() < pk.c.size() + pshift) out.c.resize(pk.c.size() + pshift);
    for (size_t j = 0; j < pk.c.size(); ++j)
      out.c[j + pshift] = poly_add(K, out.c[j + pshift], poly_scale(K, pk.c[j], scale));
  };

  for (int i = 0; i <= d; ++i) {
    // Diagonal term: coeff(x1^i x2^i) * p^i.
    mpz_class diag = grid_at(i, i);
    if (!K.is_zero(diag)) {
      if (out.c.size() <= static_cast<size_t>(i)) out.c.resize(i + 1);
      Poly<FqField> cpoly = poly_const(K, diag);
      out.c[i] = poly_add(K, out.c[i], cpoly);
    }
    for (int j = i + 1; j <= d; ++j) {
      // Off-diagonal pair x1^i x2^j + x1^j x2^i = p^i * pi_{j-i}.
      mpz_class cij = grid_at(i, j);
      accumulate(i, pi[j - i], cij);
    }
  }
  bivar_normalize(K, out);
  return out;
}

void bivar_negate_var1(const FqField& K, Bivar& a) {
  for (auto& p : a.c)
    for (int i = 1; i <= p.deg(); i += 2) p.c[i] = K.neg(p.c[i]);
}

Poly<FqField> bivar_remove_content(const FqField& K, Bivar& a) {
  Poly<FqField> g;
  for (const auto& p : a.c)
    if (!p.is_zero()) g = g.is_zero() ? poly_make_monic(K, p) : poly_gcd(K, g, p);
  if (g.deg() >= 1) {
    for (auto& p : a.c)
      if (!p.is_zero()) p = poly_exact_div(K, p, g);
  }
  return g;
}

namespace {

// Shared evaluation-interpolation core, generic over the evaluation field.
template <class E, class LiftFn, class PointFn, class DescendFn>
Poly<FqField> resultant_core(const FqField& K, const E& ext, const Bivar& a, const Bivar& b,
                             LiftFn lift, PointFn point_at, size_t points_available,
                             DescendFn descend) {
  const int da2 = a.deg2(), db2 = b.deg2();
  if (a.is_zero() || b.is_zero()) return Poly<FqField>{};
  if (da2 == 0) {
    // Res_{x2}(a(x1), b) = a(x1)^{deg_{x2} b}
    Poly<FqField> r = poly_one(K);
    for (int i = 0; i < db2; ++i) r = poly_mul(K, r, a.c[0]);
    return r;
  }
  if (db2 == 0) {
    Poly<FqField> r = poly_one(K);
    for (int i = 0; i < da2; ++i) r = poly_mul(K, r, b.c[0]);
    return r;
  }

  const long bound = static_cast<long>(da2) * std::max(b.deg1(), 0) +
                     static_cast<long>(db2) * std::max(a.deg1(), 0);
  const size_t need = static_cast<size_t>(bound) + 1;
  const size_t budget = 3 * need;  // need + 2x slack for degenerate points
  if (points_available < need)
    throw err_insufficient_points("resultant needs " + std::to_string(need) +
                                  " evaluation points, field supplies fewer");

  // Lift rows into the evaluation field once.
  std::vector<Poly<E>> alift, blift;
  alift.reserve(a.c.size());
  for (const auto& row : a.c) alift.push_back(lift(row));
  blift.reserve(b.c.size());
  for (const auto& row : b.c) blift.push_back(lift(row));

  std::vector<typename E::Element> xs, ys;
  xs.reserve(need);
  ys.reserve(need);
  size_t tried = 0;
  while (xs.size() < need) {
    if (tried >= budget || tried >= points_available)
      throw err_degenerate_leading("leading coefficients vanish at too many points");
    typename E::Element t = point_at(tried);
    ++tried;
    auto la = poly_eval(ext, alift[da2], t);
    auto lb = poly_eval(ext, blift[db2], t);
    if (ext.is_zero(la) || ext.is_zero(lb)) continue;
    Poly<E> av, bv;
    av.c.reserve(alift.size());
    for (const auto& row : alift) av.c.push_back(poly_eval(ext, row, t));
    poly_normalize(ext, av);
    bv.c.reserve(blift.size());
    for (const auto& row : blift) bv.c.push_back(poly_eval(ext, row, t));
    poly_normalize(ext, bv);
    xs.push_back(t);
    ys.push_back(poly_resultant(ext, av, bv));
  }
  Poly<E> res = poly_interpolate(ext, xs, ys);
  return descend(res);
}

}  // namespace

Poly<FqField> resultant_by_interpolation(const FqField& K, const Bivar& a, const Bivar& b,
                                         ElimVar eliminate) {
  if (eliminate == ElimVar::x1)
    return resultant_by_interpolation(K, bivar_transpose(K, a), bivar_transpose(K, b),
                                      ElimVar::x2);
  size_t avail;
  if (mpz_fits_ulong_p(K.q().get_mpz_t()))
    avail = mpz_get_ui(K.q().get_mpz_t());
  else
    avail = ~size_t{0};
  return resultant_core(
      K, K, a, b, [&](const Poly<FqField>& p) { return p; },
      [&](size_t i) { return K.from_mpz(mpz_class(static_cast<unsigned long>(i))); }, avail,
      [&](const Poly<FqField>& r) { return r; });
}

Poly<FqField> resultant_by_interpolation_ext(const FqField& K, const Bivar& a, const Bivar& b) {
  if (!mpz_fits_ulong_p(K.q().get_mpz_t()))
    return resultant_by_interpolation(K, a, b, ElimVar::x2);
  QuadExt E = make_quadratic_extension(K);
  unsigned long qsmall = mpz_get_ui(K.q().get_mpz_t());
  size_t avail = static_cast<size_t>(qsmall) * qsmall;
  auto lift = [&](const Poly<FqField>& p) {
    Poly<QuadExt> r;
    r.c.reserve(p.c.size());
    for (const auto& v : p.c) r.c.push_back(E.from_base(v));
    return r;
  };
  auto point_at = [&](size_t i) {
    // Enumerate i0 + i1*theta over F_{q^2}.
    mpz_class lo(static_cast<unsigned long>(i % qsmall));
    mpz_class hi(static_cast<unsigned long>(i / qsmall));
    Poly<FqField> e;
    e.c = {K.from_mpz(lo), K.from_mpz(hi)};
    poly_normalize(K, e);
    return e;
  };
  auto descend = [&](const Poly<QuadExt>& r) {
    Poly<FqField> out;
    out.c.reserve(r.c.size());
    for (const auto& v : r.c) {
      if (v.deg() > 0)
        throw err_interpolation_failure("resultant coefficient escaped the base field");
      out.c.push_back(v.is_zero() ? K.zero() : v.c[0]);
    }
    poly_normalize(K, out);
    return out;
  };
  return resultant_core(K, E, a, b, lift, point_at, avail, descend);
}

}  // namespace g2rm
