#include "g2rm/families.hpp"

#include "g2rm/errors.hpp"

namespace g2rm {

namespace {

// Root of T^2 + T - 1 (so tau = zeta5 + zeta5^-1), smaller representative.
mpz_class tau5(const FqField& K) {
  auto r5 = sqrt_mod_q(K, K.from_int(5));
  if (!r5) throw err_tau_not_rational("q = " + K.q().get_str() + " is not +-1 mod 5");
  auto inv2 = K.inv(K.from_int(2));
  auto t1 = K.mul(K.sub(*r5, K.one()), inv2);
  auto t2 = K.mul(K.sub(K.neg(*r5), K.one()), inv2);
  return t1 <= t2 ? t1 : t2;
}

void validate_family_curve(CurveModel& c) {
  try {
    validate_curve(c);
  } catch (const InputError& e) {
    throw err_singular_parameter(e.what());
  }
}

}  // namespace

RMFamilyInstance make_ttv(FieldCtxPtr ctx, const mpz_class& t) {
  FqField K(ctx);
  if (mpz_divisible_ui_p(K.q().get_mpz_t(), 5))
    throw err_tau_not_rational("q must not be a power of 5");
  mpz_class r = K.q() % 5;
  if (r != 1 && r != 4) throw err_tau_not_rational("q = " + K.q().get_str() + " is +-2 mod 5");

  RMFamilyInstance inst;
  inst.curve.ctx = std::move(ctx);
  inst.curve.family = FamilyTag::tautz;
  inst.curve.param_t = K.from_mpz(t);
  inst.curve.f = poly_from_ints(K, {0, 5, 0, -5, 0, 1});
  inst.curve.f.c[0] = inst.curve.param_t;
  poly_normalize(K, inst.curve.f);
  validate_family_curve(inst.curve);

  mpz_class tau = tau5(K);
  inst.delta = 5;
  inst.tr_phi = -1;
  inst.n_phi = -1;
  auto& dp = inst.divpolys;
  dp.d2 = poly_one(K);
  dp.d1.c = {K.zero(), K.neg(tau)};
  poly_normalize(K, dp.d1);
  dp.d0.c = {K.sub(K.mul(tau, tau), K.from_int(4)), K.zero(), K.one()};
  dp.e2 = poly_one(K);
  dp.e1 = poly_zero(K);
  dp.e0 = poly_one(K);
  return inst;
}

RMFamilyInstance make_humbert5(FieldCtxPtr ctx, const mpz_class& s_in, const mpz_class& t_in) {
  FqField K(ctx);
  mpz_class s = K.from_mpz(s_in), t = K.from_mpz(t_in);
  if (K.is_zero(s)) throw err_singular_parameter("humbert5 needs s != 0 (degree drop)");

  RMFamilyInstance inst;
  inst.curve.ctx = std::move(ctx);
  inst.curve.family = FamilyTag::humbert5;
  inst.curve.param_s = s;
  inst.curve.param_t = t;
  // f = s x^5 - (2s+t) x^4 + (s^2+3s+2t-1) x^3 - (3s+t-3) x^2 + (s-3) x + 1
  auto c5 = s;
  auto c4 = K.neg(K.add(K.add(s, s), t));
  auto c3 = K.from_mpz(s * s + 3 * s + 2 * t - 1);
  auto c2 = K.neg(K.from_mpz(3 * s + t - 3));
  auto c1 = K.from_mpz(s - 3);
  inst.curve.f.c = {K.one(), c1, c2, c3, c4, c5};
  poly_normalize(K, inst.curve.f);
  if (inst.curve.f.deg() != 5) throw err_singular_parameter("humbert5 degree drop");
  validate_family_curve(inst.curve);

  inst.delta = 5;
  inst.tr_phi = -1;
  inst.n_phi = -1;
  auto& dp = inst.divpolys;
  auto s2 = K.mul(s, s);
  dp.d2 = poly_xpow(K, 2);
  dp.d1.c = {s2, K.sub(s2, s)};
  poly_normalize(K, dp.d1);
  dp.d0.c = {s2, K.neg(s2)};
  poly_normalize(K, dp.d0);
  dp.e2 = poly_one(K);
  dp.e1 = poly_zero(K);
  dp.e0 = poly_one(K);
  return inst;
}

RMFamilyInstance make_mestre8(FieldCtxPtr ctx, const mpz_class& s_in, const mpz_class& t_in) {
  FqField K(ctx);
  mpz_class s = K.from_mpz(s_in), t = K.from_mpz(t_in);
  auto s2m2 = K.sub(K.mul(s, s), K.from_int(2));
  if (K.is_zero(s2m2)) throw err_denominator_vanishes("mestre8: s^2 = 2");
  auto s2p2 = K.add(K.mul(s, s), K.from_int(2));
  auto v = K.mul(s2p2, K.inv(s2m2));
  // n = 4s(s^4+4)/(s^2-2)^3
  auto s4p4 = K.add(K.mul(K.mul(s, s), K.mul(s, s)), K.from_int(4));
  auto den3 = K.mul(K.mul(s2m2, s2m2), s2m2);
  auto n = K.mul(K.mul(K.from_int(4), K.mul(s, s4p4)), K.inv(den3));
  if (K.is_zero(n)) throw err_denominator_vanishes("mestre8: n(s) = 0");

  RMFamilyInstance inst;
  inst.curve.ctx = std::move(ctx);
  inst.curve.family = FamilyTag::mestre8;
  inst.curve.param_s = s;
  inst.curve.param_t = t;
  inst.weier_x = v;

  // f = (vx - 1)(x - v)(x^4 - t x^2 + v t - 1)
  Poly<FqField> lin1, lin2, quart;
  lin1.c = {K.from_int(-1), v};
  poly_normalize(K, lin1);
  lin2.c = {K.neg(v), K.one()};
  quart.c = {K.sub(K.mul(v, t), K.one()), K.zero(), K.neg(t), K.zero(), K.one()};
  poly_normalize(K, quart);
  inst.curve.f = poly_mul(K, poly_mul(K, lin1, lin2), quart);
  if (inst.curve.f.deg() != 6) throw err_singular_parameter("mestre8 degree drop");
  validate_family_curve(inst.curve);

  inst.delta = 8;
  inst.tr_phi = 0;
  inst.n_phi = -2;
  auto& dp = inst.divpolys;
  auto v2 = K.mul(v, v);
  dp.d2.c = {K.neg(v2), K.zero(), K.one()};
  dp.d1 = poly_zero(K);
  dp.d0.c = {K.one(), K.zero(), K.neg(v2)};
  poly_normalize(K, dp.d0);
  // Shared quartic x^4 - t x^2 + t v^2 - 1 (note: not the quartic factor of f).
  Poly<FqField> quart2;
  quart2.c = {K.sub(K.mul(t, v2), K.one()), K.zero(), K.neg(t), K.zero(), K.one()};
  poly_normalize(K, quart2);
  dp.e2 = poly_mul(K, dp.d2, inst.curve.f);
  dp.e1 = poly_scale(K, poly_mul(K, lin2, quart2), n);
  dp.e0 = poly_scale(K, poly_mul(K, lin1, quart2), n);
  return inst;
}

RMFamilyInstance instance_from_spec(const CurveSpecText& spec) {
  auto ctx = make_field(spec.q);
  auto need = [&](const std::optional<std::string>& p, const char* name) -> mpz_class {
    if (!p) throw InputError("BadCurveSpec", std::string("family needs parameter ") + name);
    return mpz_class(*p);
  };
  if (spec.family == "tautz") return make_ttv(ctx, need(spec.t, "t"));
  if (spec.family == "humbert5") return make_humbert5(ctx, need(spec.s, "s"), need(spec.t, "t"));
  if (spec.family == "mestre8") return make_mestre8(ctx, need(spec.s, "s"), need(spec.t, "t"));
  throw InputError("BadCurveSpec", "explicit curves carry no RM endomorphism data");
}

CurveModel curve_from_spec(const CurveSpecText& spec) {
  if (spec.family != "explicit") return instance_from_spec(spec).curve;
  CurveModel c;
  c.ctx = make_field(spec.q);
  FqField K(c.ctx);
  for (const auto& coeff : spec.f_coeffs) c.f.c.push_back(K.from_mpz(mpz_class(coeff)));
  poly_normalize(K, c.f);
  c.family = FamilyTag::explicit_f;
  validate_curve(c);
  return c;
}

namespace {

// rho = sqrt(lc f) inside F_q[T]/(u) for irreducible quadratic u; exists
// because every F_q scalar is a square in the quadratic extension.
Poly<FqField> ext_sqrt_of_scalar(const FqField& K, const Poly<FqField>& u, const mpz_class& c) {
  auto direct = sqrt_mod_q(K, c);
  if (direct) return poly_const(K, *direct);
  // Solve (aT + b)^2 = c with b = a u1/2: a^2 = 4c / (u1^2 - 4u0).
  auto u1 = u.c[1];
  auto u0 = u.c[0];
  auto disc = K.sub(K.mul(u1, u1), K.mul(K.from_int(4), u0));
  auto a2 = K.mul(K.mul(K.from_int(4), c), K.inv(disc));
  auto a = sqrt_mod_q(K, a2);
  if (!a) throw err_non_generic_input("no square root in the quadratic extension");
  Poly<FqField> r;
  r.c = {K.mul(*a, K.mul(u1, K.inv(K.from_int(2)))), *a};
  poly_normalize(K, r);
  return r;
}

}  // namespace

Divisor phi_eval(const RMFamilyInstance& inst, const Divisor& D) {
  const FqField K = inst.field();
  const auto C = curve_ops(inst.curve);
  if (mum_is_identity(K, C, D)) return D;
  if (!mum_valid(K, C, D)) throw err_non_generic_input("invalid divisor");
  if (inst.curve.even_model() && (D.inf != 0 || D.u.deg() != 2))
    throw err_non_generic_input("even-model divisor outside the generic stratum");

  auto idlift = [](const mpz_class& x) { return x; };

  auto check_image = [&](const Divisor& img) {
    if (!mum_valid(K, C, img))
      throw err_non_generic_input("endomorphism image degenerates at this divisor");
  };

  if (D.u.deg() == 1) {
    mpz_class xP = K.neg(D.u.c[0]);
    mpz_class yP = D.v.is_zero() ? K.zero() : D.v.c[0];
    auto img = eq4_image(K, inst.divpolys, idlift, xP, yP);
    check_image(img);
    return img;
  }

  // deg u = 2: split over F_q when possible, else work in F_q[T]/(u).
  auto u1 = D.u.c[1];
  auto u0 = D.u.c[0];
  auto disc = K.sub(K.mul(u1, u1), K.mul(K.from_int(4), u0));
  auto rdisc = sqrt_mod_q(K, disc);
  if (rdisc) {
    auto inv2 = K.inv(K.from_int(2));
    mpz_class x1 = K.mul(K.sub(*rdisc, u1), inv2);
    mpz_class x2 = K.mul(K.sub(K.neg(*rdisc), u1), inv2);
    auto yof = [&](const mpz_class& x) { return poly_eval(K, D.v, x); };
    auto im1 = eq4_image(K, inst.divpolys, idlift, x1, yof(x1));
    auto im2 = eq4_image(K, inst.divpolys, idlift, x2, yof(x2));
    auto sum = cantor_add(K, C, im1, im2);
    check_image(sum);
    return sum;
  }

  QuadExt E(K, D.u);
  auto lift = [&](const mpz_class& x) { return E.from_base(x); };
  std::optional<Poly<FqField>> rhoE;
  if (inst.curve.even_model())
    rhoE = ext_sqrt_of_scalar(K, D.u, poly_lc(inst.curve.f));
  Poly<QuadExt> fE;
  for (const auto& cf : inst.curve.f.c) fE.c.push_back(E.from_base(cf));
  auto CE = make_curve_poly(E, fE, rhoE);

  auto xP = E.gen();
  auto yP = D.v;  // v(T) as an element of the extension
  auto im = eq4_image(E, inst.divpolys, lift, xP, yP);
  // Conjugate: T -> -u1 - T.
  auto conj = [&](const Poly<FqField>& z) {
    Poly<FqField> r = z;
    if (r.deg() >= 1) {
      r.c[0] = K.sub(r.c[0], K.mul(r.c[1], u1));
      r.c[1] = K.neg(r.c[1]);
    }
    poly_normalize(K, r);
    return r;
  };
  MumfordDiv<QuadExt> imc;
  imc.u.c.reserve(im.u.c.size());
  for (const auto& z : im.u.c) imc.u.c.push_back(conj(z));
  imc.v.c.reserve(im.v.c.size());
  for (const auto& z : im.v.c) imc.v.c.push_back(conj(z));
  imc.inf = im.inf;
  auto sumE = cantor_add(E, CE, im, imc);

  Divisor out;
  auto descend = [&](const Poly<QuadExt>& p) {
    Poly<FqField> r;
    for (const auto& z : p.c) {
      if (z.deg() > 0) throw err_non_generic_input("image does not descend to F_q");
      r.c.push_back(z.is_zero() ? K.zero() : z.c[0]);
    }
    poly_normalize(K, r);
    return r;
  };
  out.u = descend(sumE.u);
  out.v = descend(sumE.v);
  out.inf = sumE.inf;
  check_image(out);
  return out;
}

}  // namespace g2rm
