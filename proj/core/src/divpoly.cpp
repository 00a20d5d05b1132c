#include "g2rm/divpoly.hpp"

#include "g2rm/funcfield.hpp"

namespace g2rm {

namespace {

using RF = RationalFunctionField<FqField>;
using CF = CurveFunctionField<FqField>;

// lcm with monic output.
Poly<FqField> poly_lcm(const FqField& K, const Poly<FqField>& a, const Poly<FqField>& b) {
  auto g = poly_gcd(K, a, b);
  return poly_make_monic(K, poly_mul(K, poly_exact_div(K, a, g), b));
}

DivisionPolys generic_division_polys(const CurveModel& c, const std::optional<mpz_class>& weier,
                                     const DivisionPolys* phi, const mpz_class& a,
                                     const mpz_class& b) {
  const FqField K = c.field();
  RF rf(K);
  CF L(rf, rf.from_poly(c.f));

  // Curve over L: constant coefficients; rho lifts from F_q when rational.
  Poly<CF> fL;
  fL.c.reserve(c.f.c.size());
  for (const auto& cf : c.f.c) fL.c.push_back(L.from_rf(rf.from_poly(poly_const(K, cf))));
  std::optional<CF::Element> rhoL;
  if (c.even_model()) {
    auto r = sqrt_mod_q(K, poly_lc(c.f));
    if (r) rhoL = L.from_rf(rf.from_poly(poly_const(K, *r)));
  }
  const auto CL = make_curve_poly(L, fL, rhoL);

  auto constL = [&](const mpz_class& v) { return L.from_rf(rf.from_poly(poly_const(K, v))); };
  const CF::Element xP = L.from_rf(rf.gen());
  const CF::Element yP = L.ygen();

  // Embedded generic point.
  MumfordDiv<CF> DP;
  if (!c.even_model()) {
    DP.u.c = {L.neg(xP), L.one()};
    DP.v.c = {yP};
  } else {
    if (!weier)
      throw err_non_generic_shape("even-degree model needs a Weierstrass embedding point");
    CF::Element wv = constL(*weier);
    // u = (x - xP)(x - w), v = yP (x - w)/(xP - w)
    DP.u.c = {L.mul(xP, wv), L.neg(L.add(xP, wv)), L.one()};
    CF::Element slope = L.mul(yP, L.inv(L.sub(xP, wv)));
    DP.v.c = {L.neg(L.mul(slope, wv)), slope};
    poly_normalize(L, DP.v);
  }

  MumfordDiv<CF> acc = mum_identity(L, CL);
  try {
    if (a != 0) acc = scalar_mul(L, CL, a, DP);
    if (b != 0) {
      if (!phi) throw err_non_generic_shape("phi part requested without phi data");
      auto lift = [&](const mpz_class& v) { return constL(v); };
      auto phiDP = eq4_image(L, *phi, lift, xP, yP);
      acc = cantor_add(L, CL, acc, scalar_mul(L, CL, b, phiDP));
    }
  } catch (const Error& e) {
    throw err_non_generic_shape(std::string("generic image degenerates: ") + e.what());
  }

  if (acc.u.deg() != 2 || acc.v.deg() > 1)
    throw err_non_generic_shape("generic image is not in Mumford general position");

  // u = x^2 + (d1/d2) x + (d0/d2): pure even part.
  // v = yP ((e1/e2) x + (e0/e2)): pure odd part.
  const CF::Element& U1 = acc.u.c[1];
  const CF::Element& U0 = acc.u.c[0];
  const CF::Element V1 = acc.v.deg() >= 1 ? acc.v.c[1] : L.zero();
  const CF::Element V0 = acc.v.deg() >= 0 && !acc.v.is_zero() ? acc.v.c[0] : L.zero();
  if (!rf.is_zero(U1.B) || !rf.is_zero(U0.B) || !rf.is_zero(V1.A) || !rf.is_zero(V0.A))
    throw err_non_generic_shape("generic image lost the y_P parity split");

  DivisionPolys out;
  out.d2 = poly_lcm(K, U1.A.den, U0.A.den);
  out.d1 = poly_mul(K, U1.A.num, poly_exact_div(K, out.d2, U1.A.den));
  out.d0 = poly_mul(K, U0.A.num, poly_exact_div(K, out.d2, U0.A.den));
  Poly<FqField> e1den = rf.is_zero(V1.B) ? poly_one(K) : V1.B.den;
  Poly<FqField> e0den = rf.is_zero(V0.B) ? poly_one(K) : V0.B.den;
  out.e2 = poly_lcm(K, e1den, e0den);
  out.e1 = poly_mul(K, V1.B.num, poly_exact_div(K, out.e2, e1den));
  out.e0 = poly_mul(K, V0.B.num, poly_exact_div(K, out.e2, e0den));
  return out;
}

std::optional<mpz_class> weier_of(const CurveModel& c) {
  if (!c.even_model()) return std::nullopt;
  if (c.family != FamilyTag::mestre8) return std::nullopt;
  const FqField K = c.field();
  auto s2m2 = K.sub(K.mul(c.param_s, c.param_s), K.from_int(2));
  auto s2p2 = K.add(K.mul(c.param_s, c.param_s), K.from_int(2));
  return K.mul(s2p2, K.inv(s2m2));
}

}  // namespace

DivisionPolys alpha_division_polys(const RMFamilyInstance& inst, const RMOrderElement& alpha) {
  return generic_division_polys(inst.curve, inst.weier_x, &inst.divpolys, alpha.a, alpha.b);
}

DivisionPolys k_division_polys(const CurveModel& c, long k) {
  if (k < 2) throw err_non_generic_shape("k-division polynomials need k >= 2");
  return generic_division_polys(c, weier_of(c), nullptr, mpz_class(k), 0);
}

DivpolyDegrees divpoly_degrees(const DivisionPolys& dp) {
  return {dp.d0.deg(), dp.d1.deg(), dp.d2.deg(), dp.e0.deg(), dp.e1.deg(), dp.e2.deg()};
}

}  // namespace g2rm
