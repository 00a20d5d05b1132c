#include "g2rm/jacobian.hpp"

#include <cstdint>
#include <vector>

#include "g2rm/errors.hpp"

namespace g2rm {

Divisor random_divisor(const CurveModel& c, ChaChaRng& rng) {
  const FqField K = c.field();
  const auto C = curve_ops(c);

  auto sample_point = [&](mpz_class& x, mpz_class& y) {
    for (;;) {
      x = K.random(rng);
      auto fx = poly_eval(K, c.f, x);
      auto r = sqrt_mod_q(K, fx);
      if (!r) continue;
      y = *r;
      if (!K.is_zero(y) && rng.next_bool()) y = K.neg(y);
      return;
    }
  };

  for (;;) {
    mpz_class x1, y1, x2, y2;
    sample_point(x1, y1);
    sample_point(x2, y2);
    if (!c.even_model()) {
      Divisor d1, d2;
      d1.u.c = {K.neg(x1), K.one()};
      d1.v = poly_const(K, y1);
      d2.u.c = {K.neg(x2), K.one()};
      d2.v = poly_const(K, y2);
      return cantor_add(K, C, d1, d2);
    }
    auto d = divisor_from_points(K, C, x1, y1, x2, y2);
    if (d) return *d;
  }
}

namespace {

struct ExtElem {
  std::uint64_t a0, a1;  // a0 + a1*w with w^2 = ns
};

}  // namespace

std::pair<mpz_class, mpz_class> brute_force_charpoly(const CurveModel& c) {
  const mpz_class& qz = c.field().q();
  if (qz > 65536) throw err_too_large("brute force guard: q <= 2^16, got " + qz.get_str());
  const std::uint64_t Q = mpz_get_ui(qz.get_mpz_t());

  std::uint64_t f[7] = {0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i <= c.f.deg(); ++i) f[i] = mpz_get_ui(c.f.c[i].get_mpz_t());
  const int deg = c.f.deg();

  std::vector<std::uint8_t> issq(Q, 0);
  for (std::uint64_t y = 0; y < Q; ++y) issq[(y * y) % Q] = 1;

  std::uint64_t ns = 2;
  while (ns < Q && issq[ns]) ++ns;

  // Points over F_q.
  long n1 = 0;
  for (std::uint64_t x = 0; x < Q; ++x) {
    std::uint64_t fx = f[deg];
    for (int i = deg - 1; i >= 0; --i) fx = (fx * x + f[i]) % Q;
    if (fx == 0)
      n1 += 1;
    else if (issq[fx])
      n1 += 2;
  }
  if (deg == 5)
    n1 += 1;
  else
    n1 += issq[f[6]] ? 2 : 0;

  // Points over F_{q^2}.  Elements of F_q contribute 1 or 2 directly (every
  // nonzero F_q value is a square in the quadratic extension); the rest come
  // in conjugate pairs with matching contributions.
  long n2 = 0;
  for (std::uint64_t x = 0; x < Q; ++x) {
    std::uint64_t fx = f[deg];
    for (int i = deg - 1; i >= 0; --i) fx = (fx * x + f[i]) % Q;
    n2 += (fx == 0) ? 1 : 2;
  }
  for (std::uint64_t a = 1; a <= (Q - 1) / 2; ++a) {
    for (std::uint64_t b = 0; b < Q; ++b) {
      // Horner at x = b + a*w.
      std::uint64_t r0 = f[deg], r1 = 0;
      for (int i = deg - 1; i >= 0; --i) {
        std::uint64_t t0 = (r0 * b + ((r1 * a) % Q) * ns + f[i]) % Q;
        std::uint64_t t1 = (r0 * a + r1 * b) % Q;
        r0 = t0;
        r1 = t1;
      }
      if (r0 == 0 && r1 == 0) {
        n2 += 2;  // one point on each conjugate x
      } else {
        // Quadratic residue in F_{q^2} iff the F_q-norm is a residue; the
        // norm form is anisotropic, so nrm != 0 here.
        std::uint64_t nrm = (r0 * r0 + (Q * Q - ((r1 * r1) % Q) * ns)) % Q;
        if (issq[nrm]) n2 += 4;
      }
    }
  }
  n2 += (deg == 5) ? 1 : 2;

  mpz_class s1 = qz + 1 - n1;
  mpz_class t2 = qz * qz + 1 - n2;
  mpz_class s2 = (s1 * s1 - t2) / 2 - 2 * qz;
  return {s1, s2};
}

mpz_class jacobian_order(const mpz_class& s1, const mpz_class& s2, const mpz_class& q) {
  return (q + 1) * (q + 1) - s1 * (q + 1) + s2;
}

mpz_class twisted_order(const mpz_class& s1, const mpz_class& s2, const mpz_class& q) {
  return (q + 1) * (q + 1) + s1 * (q + 1) + s2;
}

CurveModel quadratic_twist(const CurveModel& c) {
  const FqField K = c.field();
  mpz_class ns = 2;
  while (K.legendre(ns) != -1) ++ns;
  CurveModel tw;
  tw.ctx = c.ctx;
  tw.f = poly_scale(K, c.f, ns);
  tw.family = FamilyTag::explicit_f;
  return tw;
}

bool in_weil_interval(const mpz_class& n, const mpz_class& q) {
  const mpz_class mid = q * q + 6 * q + 1;
  const mpz_class rhs2 = 16 * q * (q + 1) * (q + 1);
  mpz_class lo = mid - n;  // must be <= 4 sqrt(q)(q+1)
  if (lo > 0 && lo * lo > rhs2) return false;
  mpz_class hi = n - mid;
  if (hi > 0 && hi * hi > rhs2) return false;
  return n > 0;
}

}  // namespace g2rm
