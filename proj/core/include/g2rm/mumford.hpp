#ifndef G2RM_MUMFORD_HPP
#define G2RM_MUMFORD_HPP

#include <optional>

#include "g2rm/poly.hpp"

namespace g2rm {

// Genus-2 curve y^2 = f(x) with coefficients in a field-like domain F.
// For even-degree models the two points at infinity are ordered by the
// branch y/x^3 -> +rho; rho is present only when sqrt(lc(f)) exists in F.
template <class F>
struct CurvePoly {
  Poly<F> f;
  bool even = false;
  std::optional<typename F::Element> rho;
  Poly<F> vplus;  // cubic with deg(f - vplus^2) <= 2; only for even models with rho

  int genus_degree() const { return f.deg(); }
};

template <class F>
CurvePoly<F> make_curve_poly(const F& K, Poly<F> f, std::optional<typename F::Element> rho) {
  CurvePoly<F> C;
  C.f = std::move(f);
  C.even = (C.f.deg() == 6);
  if (C.even && rho) {
    C.rho = rho;
    const auto& fc = C.f.c;
    auto inv2rho = K.inv(K.add(*rho, *rho));
    auto c2 = K.mul(fc[5], inv2rho);
    auto c1 = K.mul(K.sub(fc[4], K.mul(c2, c2)), inv2rho);
    auto c0 = K.mul(K.sub(fc[3], K.add(K.mul(c1, c2), K.mul(c1, c2))), inv2rho);
    C.vplus.c = {c0, c1, c2, *rho};
    poly_normalize(K, C.vplus);
  }
  return C;
}

// Divisor class in Mumford form: u monic of degree <= 2, deg v < deg u,
// u | v^2 - f.  For even models `inf` counts the multiplicity of the
// positive point at infinity in the balanced representative
// (0 <= inf <= 2 - deg u); odd models keep inf = 0.
template <class F>
struct MumfordDiv {
  Poly<F> u;
  Poly<F> v;
  int inf = 0;
};

template <class F>
MumfordDiv<F> mum_identity(const F& K, const CurvePoly<F>& C) {
  MumfordDiv<F> d;
  d.u = poly_one(K);
  d.inf = C.even ? 1 : 0;
  return d;
}

template <class F>
bool mum_is_identity(const F& K, const CurvePoly<F>& C, const MumfordDiv<F>& D) {
  return D.u.deg() == 0 && D.v.is_zero() && D.inf == (C.even ? 1 : 0);
}

template <class F>
bool mum_eq(const F& K, const MumfordDiv<F>& a, const MumfordDiv<F>& b) {
  return a.inf == b.inf && poly_eq(K, a.u, b.u) && poly_eq(K, a.v, b.v);
}

template <class F>
MumfordDiv<F> mum_neg(const F& K, const CurvePoly<F>& C, const MumfordDiv<F>& D) {
  MumfordDiv<F> r;
  r.u = D.u;
  r.v = D.u.deg() > 0 ? poly_rem(K, poly_neg(K, D.v), D.u) : Poly<F>{};
  r.inf = C.even ? (2 - D.u.deg() - D.inf) : 0;
  return r;
}

template <class F>
bool mum_valid(const F& K, const CurvePoly<F>& C, const MumfordDiv<F>& D) {
  if (D.u.is_zero() || !K.is_one(poly_lc(D.u))) return false;
  if (D.u.deg() > 2) return false;
  if (!D.v.is_zero() && D.v.deg() >= std::max(D.u.deg(), 1)) return false;
  if (C.even) {
    if (D.inf < 0 || D.inf > 2 - D.u.deg()) return false;
  } else if (D.inf != 0) {
    return false;
  }
  auto h = poly_sub(K, poly_mul(K, D.v, D.v), C.f);
  return poly_rem(K, h, D.u).is_zero();
}

namespace detail {

// One reduction step: replaces (U, V) representing
// [affine(U,V) + N inf+ + M inf- - 2 D_inf] by an equivalent triple of lower
// affine weight via the function y - Vr, with Vr = V (mod U) of degree <= 3.
template <class F>
void reduce_step(const F& K, const CurvePoly<F>& C, Poly<F>& U, Poly<F>& V, int& N, int& M,
                 const Poly<F>& Vr) {
  const int dU = U.deg();
  Poly<F> fm = poly_sub(K, C.f, poly_mul(K, Vr, Vr));
  // U divides f - Vr^2.
  Poly<F> W = poly_exact_div(K, fm, U);
  const int e = fm.deg();
  if (C.even) {
    bool matchp = false, matchm = false;
    if (Vr.deg() == 3 && C.rho) {
      matchp = K.eq(Vr.c[3], *C.rho);
      matchm = K.eq(Vr.c[3], K.neg(*C.rho));
    } else if (Vr.deg() == 3 && !C.rho) {
      // Vr^2 cannot reach lc(f) when sqrt(lc f) is irrational.
      auto t = K.sub(K.mul(Vr.c[3], Vr.c[3]), poly_lc(C.f));
      if (K.is_zero(t))
        throw err_non_generic_shape("reduction hit a non-rational infinite branch");
    }
    const int ordp = matchp ? (3 - e) : -3;
    const int ordm = matchm ? (3 - e) : -3;
    N = N - ordp - (e - dU);
    M = M - ordm - (e - dU);
    if (N < 0 || M < 0)
      throw err_non_generic_shape("negative infinity multiplicity during reduction");
  }
  U = poly_make_monic(K, W);
  V = U.deg() > 0 ? poly_rem(K, poly_neg(K, Vr), U) : Poly<F>{};
}

// Cubic Vr congruent to v mod U whose x^3 coefficient is lambda, chosen to
// cancel the x^5 term of f - Vr^2 when possible.
template <class F>
Poly<F> rebalance_cubic(const F& K, const CurvePoly<F>& C, const Poly<F>& U, const Poly<F>& v,
                        const typename F::Element& lambda) {
  if (U.deg() == 2) {
    // Vr = v + U*(lambda*x + mu) with mu killing the x^5 coefficient.
    auto u1 = U.c[1];
    auto inv2l = K.inv(K.add(lambda, lambda));
    auto mu = K.sub(K.mul(C.f.c[5], inv2l), K.mul(lambda, u1));
    Poly<F> lin;
    lin.c = {mu, lambda};
    poly_normalize(K, lin);
    return poly_add(K, v, poly_mul(K, U, lin));
  }
  // deg U <= 1: start from the branch cubic and correct mod U.
  Poly<F> Vl = C.vplus;
  if (!K.eq(lambda, *C.rho)) Vl = poly_neg(K, Vl);
  if (U.deg() == 0) return Vl;
  Poly<F> corr = poly_rem(K, poly_sub(K, v, Vl), U);
  return poly_add(K, Vl, corr);
}

}  // namespace detail

// Cantor composition and reduction, full case analysis; handles shared
// points, Weierstrass support and sub-generic degrees via the gcd chain.
template <class F>
MumfordDiv<F> cantor_add(const F& K, const CurvePoly<F>& C, const MumfordDiv<F>& D1,
                         const MumfordDiv<F>& D2) {
  if (mum_is_identity(K, C, D1)) return D2;
  if (mum_is_identity(K, C, D2)) return D1;

  const int m1 = C.even ? (2 - D1.u.deg() - D1.inf) : 0;
  const int m2 = C.even ? (2 - D2.u.deg() - D2.inf) : 0;

  // Composition.
  Poly<F> d1g, e1, e2;
  poly_xgcd(K, D1.u, D2.u, d1g, e1, e2);
  Poly<F> vsum = poly_add(K, D1.v, D2.v);
  Poly<F> d, s1, s2, s3;
  if (d1g.deg() == 0) {
    d = poly_one(K);
    s1 = e1;
    s2 = e2;
    s3 = poly_zero(K);
  } else {
    Poly<F> c1, c2;
    poly_xgcd(K, d1g, vsum, d, c1, c2);
    s1 = poly_mul(K, c1, e1);
    s2 = poly_mul(K, c1, e2);
    s3 = c2;
  }
  Poly<F> U = poly_exact_div(K, poly_mul(K, D1.u, D2.u), poly_mul(K, d, d));
  // V = (s1 u1 v2 + s2 u2 v1 + s3 (v1 v2 + f)) / d mod U
  Poly<F> num = poly_add(K, poly_mul(K, poly_mul(K, s1, D1.u), D2.v),
                         poly_mul(K, poly_mul(K, s2, D2.u), D1.v));
  num = poly_add(K, num, poly_mul(K, s3, poly_add(K, poly_mul(K, D1.v, D2.v), C.f)));
  Poly<F> V = poly_rem(K, poly_exact_div(K, num, d), U);

  int N = D1.inf + D2.inf + d.deg();
  int M = m1 + m2 + d.deg();

  // Reduction to affine weight <= 2.
  while (U.deg() > 2) {
    Poly<F> Vr = V;
    if (C.even && U.deg() == 3) {
      // A cubic Vr with leading coefficient +-rho steers the reduction;
      // choose the sign that feeds the deficient side at infinity.
      if (!C.rho)
        throw err_non_generic_shape("odd-weight reduction needs rational infinite points");
      auto lam = (N <= M) ? K.neg(*C.rho) : *C.rho;
      Vr = poly_add(K, V, poly_scale(K, U, lam));
    }
    detail::reduce_step(K, C, U, V, N, M, Vr);
  }

  // Balance the infinity counters into the final window.
  if (C.even) {
    int guard = 0;
    while (N == 0 || M == 0) {
      if (!C.rho)
        throw err_non_generic_shape("unbalanced infinity weight needs rational infinite points");
      if (++guard > 8) throw err_non_generic_shape("infinity balancing failed to converge");
      auto lam = (N > M) ? *C.rho : K.neg(*C.rho);
      Poly<F> Vr = detail::rebalance_cubic(K, C, U, V, lam);
      detail::reduce_step(K, C, U, V, N, M, Vr);
    }
  }

  MumfordDiv<F> R;
  R.u = U;
  R.v = V;
  if (C.even) {
    R.inf = N - 1;
    const int mm = M - 1;
    if (R.inf < 0 || mm < 0 || R.inf + mm != 2 - U.deg())
      throw err_non_generic_shape("inconsistent infinity counters after reduction");
  }
  return R;
}

template <class F>
MumfordDiv<F> cantor_sub(const F& K, const CurvePoly<F>& C, const MumfordDiv<F>& D1,
                         const MumfordDiv<F>& D2) {
  return cantor_add(K, C, D1, mum_neg(K, C, D2));
}

template <class F>
MumfordDiv<F> scalar_mul(const F& K, const CurvePoly<F>& C, const mpz_class& k,
                         const MumfordDiv<F>& D) {
  if (k == 0) return mum_identity(K, C);
  mpz_class e = k;
  MumfordDiv<F> base = D;
  if (e < 0) {
    e = -e;
    base = mum_neg(K, C, D);
  }
  MumfordDiv<F> r = mum_identity(K, C);
  const size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nbits; i-- > 0;) {
    r = cantor_add(K, C, r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = cantor_add(K, C, r, base);
  }
  return r;
}

// Divisor of the pair of affine points (x1,y1), (x2,y2); requires x1 != x2,
// or the tangent case x1 == x2, y1 == y2 with y1 != 0.
template <class F>
std::optional<MumfordDiv<F>> divisor_from_points(const F& K, const CurvePoly<F>& C,
                                                 const typename F::Element& x1,
                                                 const typename F::Element& y1,
                                                 const typename F::Element& x2,
                                                 const typename F::Element& y2) {
  MumfordDiv<F> D;
  if (!K.eq(x1, x2)) {
    // u = (x-x1)(x-x2), v interpolates the two points.
    D.u.c = {K.mul(x1, x2), K.neg(K.add(x1, x2)), K.one()};
    auto slope = K.mul(K.sub(y2, y1), K.inv(K.sub(x2, x1)));
    D.v.c = {K.sub(y1, K.mul(slope, x1)), slope};
    poly_normalize(K, D.v);
  } else {
    if (!K.eq(y1, y2) || K.is_zero(y1)) return std::nullopt;
    // Tangent: v = y1 + f'(x1)/(2 y1) (x - x1).
    auto fp = poly_eval(K, poly_derivative(K, C.f), x1);
    auto slope = K.mul(fp, K.inv(K.add(y1, y1)));
    D.u.c = {K.mul(x1, x1), K.neg(K.add(x1, x1)), K.one()};
    D.v.c = {K.sub(y1, K.mul(slope, x1)), slope};
    poly_normalize(K, D.v);
  }
  D.inf = 0;
  return D;
}

}  // namespace g2rm

#endif  // G2RM_MUMFORD_HPP
