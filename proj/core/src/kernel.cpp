#include "g2rm/kernel.hpp"

#include "g2rm/bivariate.hpp"

namespace g2rm {

namespace {

// Bivariate in (a1, a0) -> TPoly at the requested level (a1 = x0, a0 = x1).
TPoly bivar_to_tpoly(const FqField& K, const Bivar& g, int level) {
  TPoly t;
  t.level = 1;
  t.kids.reserve(g.c.size());
  for (const auto& row : g.c) t.kids.push_back(tp_from_poly(K, 0, row));
  tp_normalize(t);
  return tp_embed(t, level);
}

// G(s, p) with s = x1 + x2, p = x1 x2, rewritten in a1 = -s, a0 = p.
Bivar symmetrized(const FqField& K, const Bivar& E) {
  Bivar q = bivar_div_x1_minus_x2(K, E);
  Bivar g = bivar_symmetric_reduce(K, q);
  bivar_negate_var1(K, g);
  return g;
}

// Plain symmetric input (no antisymmetric division).
Bivar symmetrized_direct(const FqField& K, const Bivar& E) {
  Bivar g = bivar_symmetric_reduce(K, E);
  bivar_negate_var1(K, g);
  return g;
}

Poly<FqField> res_eliminating_a0(const FqField& K, const Bivar& a, const Bivar& b) {
  try {
    return resultant_by_interpolation(K, a, b, ElimVar::x2);
  } catch (const ComputeError& e) {
    if (std::string(e.key()) == "InsufficientPoints")
      return resultant_by_interpolation_ext(K, a, b);
    throw;
  }
}

}  // namespace

KernelIdeal build_kernel_ideal(const RMFamilyInstance& inst, const DivisionPolys& dp) {
  const FqField K = inst.field();
  const Poly<FqField>& f = inst.curve.f;

  if (dp.d2.is_zero()) throw err_empty_kernel("d2 vanishes identically");

  // Matching conditions for alpha(D_{P1}) = -alpha(D_{P2}) on the x-side.
  // E1, E0: equality of the two u-coordinates; EB: proportionality of the
  // v-coefficients; Ey: consistency of y2^2 = f(x2) with the y-ratio.
  const bool e1zero = dp.e1.is_zero();
  if (e1zero && dp.e0.is_zero()) throw err_empty_kernel("v-part of the image vanishes");
  const Poly<FqField>& ra = e1zero ? dp.e0 : dp.e1;

  std::vector<Bivar> conds;
  {
    Bivar E1 = bivar_sub(K, bivar_outer(K, dp.d1, dp.d2), bivar_outer(K, dp.d2, dp.d1));
    Bivar E0 = bivar_sub(K, bivar_outer(K, dp.d0, dp.d2), bivar_outer(K, dp.d2, dp.d0));
    Poly<FqField> fra2 = poly_mul(K, f, poly_sqr(K, ra));
    Poly<FqField> e22 = poly_sqr(K, dp.e2);
    Bivar Ey = bivar_sub(K, bivar_outer(K, fra2, e22), bivar_outer(K, e22, fra2));
    if (!E1.is_zero()) conds.push_back(symmetrized(K, E1));
    if (!E0.is_zero()) conds.push_back(symmetrized(K, E0));
    if (!Ey.is_zero()) conds.push_back(symmetrized(K, Ey));
    if (!e1zero && !dp.e0.is_zero()) {
      Bivar EB = bivar_sub(K, bivar_outer(K, dp.e1, dp.e0), bivar_outer(K, dp.e0, dp.e1));
      if (!EB.is_zero()) conds.push_back(symmetrized(K, EB));
    }
  }
  for (auto& g : conds) bivar_remove_content(K, g);
  // Drop conditions without a0 (content removal can exhaust vertical data).
  std::vector<Bivar> gs;
  for (auto& g : conds)
    if (!g.is_zero() && g.deg2() >= 1) gs.push_back(std::move(g));
  if (gs.size() < 2) throw err_empty_kernel("fewer than two independent kernel conditions");

  // T1(a1): gcd of pairwise resultants eliminating a0, squarefree part.
  Poly<FqField> T1;
  {
    Poly<FqField> r01 = res_eliminating_a0(K, gs[0], gs[1]);
    T1 = r01;
    for (size_t k = 2; k < gs.size(); ++k) {
      Poly<FqField> r = res_eliminating_a0(K, gs[0], gs[k]);
      if (!r.is_zero()) T1 = T1.is_zero() ? r : poly_gcd(K, T1, r);
    }
    if (gs.size() >= 3) {
      Poly<FqField> r12 = res_eliminating_a0(K, gs[1], gs[2]);
      if (!r12.is_zero()) T1 = T1.is_zero() ? r12 : poly_gcd(K, T1, r12);
    }
    if (T1.is_zero()) throw err_empty_kernel("all kernel resultants vanish identically");
    T1 = poly_squarefree_part(K, T1);
    if (T1.deg() < 1) throw err_empty_kernel("kernel ideal has no a1 locus");
  }

  // Symmetric building blocks for the b-side relations.
  //   W  = ra(x1) ra(x2) e2(x1) e2(x2)
  //   F+ = f(x1) + f(x2)
  //   G+ = f ra^2(x1) e2^2(x2) + f ra^2(x2) e2^2(x1)
  //   H  = f(x1) x2 + x1 f(x2)
  // On the kernel locus y1 y2 = -G+/(2W), and:
  //   T3: W (a1^2 - 4 a0) b1^2 - (W F+ + G+) = 0
  //   T4: 2 W (a1^2 - 4 a0) b1 b0 + G+ (-a1) + 2 W H = 0
  Bivar Wb, Fplus, Gplus, Hb;
  {
    Poly<FqField> rae2 = poly_mul(K, ra, dp.e2);
    Wb = symmetrized_direct(K, bivar_outer(K, rae2, rae2));
    Poly<FqField> one = poly_one(K);
    Fplus = symmetrized_direct(
        K, bivar_add(K, bivar_outer(K, f, one), bivar_outer(K, one, f)));
    Poly<FqField> fra2 = poly_mul(K, f, poly_sqr(K, ra));
    Poly<FqField> e22 = poly_sqr(K, dp.e2);
    Gplus = symmetrized_direct(
        K, bivar_add(K, bivar_outer(K, fra2, e22), bivar_outer(K, e22, fra2)));
    Poly<FqField> x = poly_xpow(K, 1);
    Hb = symmetrized_direct(K, bivar_add(K, bivar_outer(K, f, x), bivar_outer(K, x, f)));
  }

  KernelIdeal out;

  // Seed: one-variable ideal [T1]; grow each component to four variables,
  // splitting on zero divisors as they appear.  Components finishing a
  // stage re-enter the list one variable wider.
  std::deque<TriangularIdeal> work;
  work.push_back(TriangularIdeal(K, {tp_from_poly(K, 0, T1)}));

  auto grow = [&](const TriangularIdeal& I) -> std::optional<TriangularIdeal> {
    const int nv = I.nvars();
    if (nv == 1) {
      // T2(a1, a0): monic gcd of the conditions as polynomials in a0.
      QuotField F1(K, I);
      std::vector<Poly<QuotField>> gpolys;
      for (const auto& g : gs) {
        Poly<QuotField> gp;
        gp.c.reserve(g.c.size());
        for (const auto& row : g.c) gp.c.push_back(tq_reduce(K, I, tp_from_poly(K, 0, row)));
        poly_normalize(F1, gp);
        if (!gp.is_zero()) gpolys.push_back(std::move(gp));
      }
      if (gpolys.size() < 2) return std::nullopt;  // degenerate fiber; drop
      Poly<QuotField> T2 = gpolys[0];
      for (size_t k = 1; k < gpolys.size() && !poly_is_one(F1, T2); ++k)
        T2 = poly_gcd(F1, T2, gpolys[k]);
      if (T2.deg() < 1) return std::nullopt;  // no common a0 root above this component
      T2 = poly_squarefree_part(F1, T2);
      if (T2.deg() < 1) return std::nullopt;
      TPoly t2;
      t2.level = 1;
      t2.kids.reserve(T2.c.size());
      for (const auto& cc : T2.c) t2.kids.push_back(cc);
      tp_normalize(t2);
      std::vector<TPoly> gens = {I.gen(0), std::move(t2)};
      return TriangularIdeal(K, std::move(gens));
    }
    if (nv == 2) {
      // T3: b1^2 = (W F+ + G+) / (W (a1^2 - 4 a0)).
      QuotField F2(K, I);
      Bivar disc;  // a1^2 - 4 a0
      {
        Poly<FqField> a1sq = poly_xpow(K, 2);
        disc.c.push_back(a1sq);
        disc.c.push_back(poly_from_ints(K, {-4}));
      }
      TPoly Wt = tq_reduce(K, I, bivar_to_tpoly(K, Wb, 1));
      TPoly disct = tq_reduce(K, I, bivar_to_tpoly(K, disc, 1));
      TPoly lead = tq_reduce(K, I, tp_mul(K, Wt, disct));
      TPoly rhs = tp_add(K, tq_reduce(K, I, tp_mul(K, Wt, tq_reduce(K, I, bivar_to_tpoly(K, Fplus, 1)))),
                         tq_reduce(K, I, bivar_to_tpoly(K, Gplus, 1)));
      rhs = tq_reduce(K, I, rhs);
      // Components where the leading factor vanishes identically carry
      // non-generic or parasite data only; the inversion split isolates
      // them and the zero branch is dropped.
      if (lead.is_zero()) return std::nullopt;
      TPoly leadinv = tq_inv(K, I, lead);  // may signal IdealSplit
      TPoly c3 = tq_reduce(K, I, tp_mul(K, rhs, leadinv));
      TPoly t3;
      t3.level = 2;
      t3.kids = {tp_neg(K, c3), tp_zero(1), tp_one(K, 1)};
      tp_normalize(t3);
      std::vector<TPoly> gens = {I.gen(0), I.gen(1), std::move(t3)};
      return TriangularIdeal(K, std::move(gens));
    }
    if (nv == 3) {
      // T4: b0 = -(G+ (-a1) + 2 W H) / (2 W (a1^2 - 4 a0)) * b1 / c3
      //        = omega * b1  with  omega in the (a1, a0) algebra.
      QuotField F3(K, I);
      Bivar disc;
      {
        Poly<FqField> a1sq = poly_xpow(K, 2);
        disc.c.push_back(a1sq);
        disc.c.push_back(poly_from_ints(K, {-4}));
      }
      auto lift2 = [&](const Bivar& b) { return tq_reduce(K, I, bivar_to_tpoly(K, b, 2)); };
      TPoly Wt = lift2(Wb);
      TPoly disct = lift2(disc);
      TPoly Gt = lift2(Gplus);
      TPoly Ht = lift2(Hb);
      TPoly a1t = tq_reduce(K, I, tp_var(K, 2, 0));
      // num = G+*(-a1) + 2 W H
      TPoly num = tp_add(K, tq_reduce(K, I, tp_mul(K, Gt, tp_neg(K, a1t))),
                         tp_scale(K, tq_reduce(K, I, tp_mul(K, Wt, Ht)), 2));
      num = tq_reduce(K, I, num);
      TPoly den = tq_reduce(K, I, tp_scale(K, tp_mul(K, Wt, disct), 2));
      // c3 = b1^2 as an element of the level-2 algebra: reduce b1^2.
      TPoly b1sq = tq_reduce(K, I, tp_mul(K, tp_var(K, 2, 2), tp_var(K, 2, 2)));
      if (den.is_zero() || b1sq.is_zero()) return std::nullopt;
      TPoly deninv = tq_inv(K, I, den);
      TPoly c3inv = tq_inv(K, I, b1sq);
      TPoly omega = tq_reduce(
          K, I, tp_mul(K, tp_mul(K, tp_neg(K, num), deninv), c3inv));
      // T4 = b0 - omega * b1
      TPoly wb1 = tq_reduce(K, I, tp_mul(K, omega, tp_var(K, 2, 2)));
      TPoly t4;
      t4.level = 3;
      t4.kids = {tp_neg(K, wb1), tp_one(K, 2)};
      tp_normalize(t4);
      std::vector<TPoly> gens = {I.gen(0), I.gen(1), I.gen(2), std::move(t4)};
      return TriangularIdeal(K, std::move(gens));
    }
    // nv == 4: finished component.
    out.components.push_back(I);
    out.total_degree += I.quotient_degree();
    return std::nullopt;
  };

  while (!work.empty()) {
    TriangularIdeal I = std::move(work.front());
    work.pop_front();
    try {
      auto next = grow(I);
      if (next) work.push_back(std::move(*next));
    } catch (const IdealSplit& s) {
      auto [a, b] = split_ideal(K, I, s.level, s.factor);
      work.push_back(std::move(a));
      work.push_back(std::move(b));
    }
  }

  if (out.components.empty()) throw err_empty_kernel("no kernel components survived");
  return out;
}

MumfordDiv<QuotField> generic_divisor(const QuotField& Q) {
  const FqField K = Q.base();
  const int top = Q.top();
  MumfordDiv<QuotField> D;
  D.u.c = {tp_var(K, top, 1), tp_var(K, top, 0), Q.one()};
  D.v.c = {tp_var(K, top, 3), tp_var(K, top, 2)};
  poly_normalize(Q, D.u);
  poly_normalize(Q, D.v);
  D.inf = 0;
  return D;
}

MumfordDiv<QuotField> generic_frobenius(const QuotField& Q, const MumfordDiv<QuotField>& D,
                                        const mpz_class& q) {
  MumfordDiv<QuotField> r;
  r.u.c.reserve(D.u.c.size());
  for (const auto& c : D.u.c) r.u.c.push_back(Q.pow(c, q));
  r.v.c.reserve(D.v.c.size());
  for (const auto& c : D.v.c) r.v.c.push_back(Q.pow(c, q));
  poly_normalize(Q, r.u);
  poly_normalize(Q, r.v);
  r.inf = D.inf;
  return r;
}

CurvePoly<QuotField> curve_over_quotient(const QuotField& Q, const CurveModel& c) {
  const FqField K = Q.base();
  Poly<QuotField> f;
  f.c.reserve(c.f.c.size());
  for (const auto& cf : c.f.c) f.c.push_back(tp_const(K, Q.top(), cf));
  std::optional<TPoly> rho;
  if (c.even_model()) {
    auto r = sqrt_mod_q(K, poly_lc(c.f));
    if (r) rho = tp_const(K, Q.top(), *r);
  }
  return make_curve_poly(Q, f, rho);
}

}  // namespace g2rm
