#ifndef G2RM_FAMILIES_HPP
#define G2RM_FAMILIES_HPP

#include "g2rm/curvespec.hpp"
#include "g2rm/jacobian.hpp"
#include "g2rm/quotient_field.hpp"

namespace g2rm {

// The sextuple describing an explicit endomorphism: on a generic embedded
// point P = (x_P, y_P) the image has
//   u = x^2 + (d1/d2)(x_P) x + (d0/d2)(x_P)
//   v = y_P ((e1/e2)(x_P) x + (e0/e2)(x_P)).
struct DivisionPolys {
  Poly<FqField> d0, d1, d2, e0, e1, e2;
};

struct RMFamilyInstance {
  CurveModel curve;
  int delta = 5;    // disc Z[phi]
  long tr_phi = 0;  // phi^2 - tr*phi + n = 0
  long n_phi = 0;
  DivisionPolys divpolys;  // of phi
  // mestre8 embeds through the rational Weierstrass point (weier_x, 0);
  // the odd-model families use the unique point at infinity.
  std::optional<mpz_class> weier_x;

  FqField field() const { return curve.field(); }
};

// y^2 = x^5 - 5x^3 + 5x + t, RM by Z[(1+sqrt5)/2].  Needs q = +-1 mod 5.
RMFamilyInstance make_ttv(FieldCtxPtr ctx, const mpz_class& t);

// Humbert's two-parameter Delta=5 family, odd model with lead coefficient s.
RMFamilyInstance make_humbert5(FieldCtxPtr ctx, const mpz_class& s, const mpz_class& t);

// Mestre's Delta=8 family, even-degree model with two points at infinity.
RMFamilyInstance make_mestre8(FieldCtxPtr ctx, const mpz_class& s, const mpz_class& t);

// Build from the textual curve spec; the family must not be "explicit".
RMFamilyInstance instance_from_spec(const CurveSpecText& spec);

// Plain curve from a spec (any family, including explicit).
CurveModel curve_from_spec(const CurveSpecText& spec);

// phi on a concrete divisor.  Throws NonGenericInput when a division
// polynomial denominator vanishes on the support or the divisor shape is
// outside the generic stratum; callers resample.
Divisor phi_eval(const RMFamilyInstance& inst, const Divisor& D);

// Horner evaluation of an F_q polynomial inside a larger coefficient domain.
template <class F, class LiftElem>
typename F::Element eval_lifted(const F& K, const Poly<FqField>& p, LiftElem lift,
                                const typename F::Element& x) {
  auto r = K.zero();
  for (int i = p.deg(); i >= 0; --i) r = K.add(K.mul(r, x), lift(p.c[i]));
  return r;
}

// The Mumford image of the embedded point (xP, yP) under the endomorphism
// described by dp, with coefficients in any field-like domain.
template <class F, class LiftElem>
MumfordDiv<F> eq4_image(const F& K, const DivisionPolys& dp, LiftElem lift,
                        const typename F::Element& xP, const typename F::Element& yP) {
  auto den_d = eval_lifted(K, dp.d2, lift, xP);
  auto den_e = eval_lifted(K, dp.e2, lift, xP);
  if (K.is_zero(den_d) || K.is_zero(den_e))
    throw err_non_generic_input("division polynomial denominator vanishes");
  auto invd = K.inv(den_d);
  auto inve = K.inv(den_e);
  MumfordDiv<F> img;
  img.u.c = {K.mul(eval_lifted(K, dp.d0, lift, xP), invd),
             K.mul(eval_lifted(K, dp.d1, lift, xP), invd), K.one()};
  auto ye = K.mul(yP, inve);
  img.v.c = {K.mul(eval_lifted(K, dp.e0, lift, xP), ye),
             K.mul(eval_lifted(K, dp.e1, lift, xP), ye)};
  poly_normalize(K, img.v);
  img.inf = 0;
  return img;
}

}  // namespace g2rm

#endif  // G2RM_FAMILIES_HPP
