#include "g2rm/rmorder.hpp"

#include <cmath>

#include "g2rm/errors.hpp"
#include "g2rm/fq.hpp"

namespace g2rm {

RMOrderElement RMOrder::unit_inverse() const {
  // N(eps) = -1 for Delta in {5, 8}: eps^{-1} = -conj(eps).
  RMOrderElement c = conj(eps);
  return {-c.a, -c.b};
}

RMOrder order_constants(int delta) {
  RMOrder o;
  if (delta == 5) {
    o.delta = 5;
    o.tr_phi = -1;
    o.n_phi = -1;
    o.eps = {0, 1};
    double s5 = std::sqrt(5.0);
    o.phi_emb1 = (-1.0 - s5) / 2.0;
    o.phi_emb2 = (-1.0 + s5) / 2.0;
    o.regulator = std::log((1.0 + s5) / 2.0);
  } else if (delta == 8) {
    o.delta = 8;
    o.tr_phi = 0;
    o.n_phi = -2;
    o.eps = {1, 1};
    double s2 = std::sqrt(2.0);
    o.phi_emb1 = s2;
    o.phi_emb2 = -s2;
    o.regulator = std::log(1.0 + s2);
  } else {
    throw err_unsupported_discriminant("Delta = " + std::to_string(delta) + ", want 5 or 8");
  }
  return o;
}

bool is_split(const RMOrder& ord, unsigned long ell) {
  if (ell == 0 || static_cast<unsigned long>(ord.delta) % ell == 0 ||
      (ord.delta == 8 && ell == 2))
    throw err_ramified_prime("ell = " + std::to_string(ell) + " ramifies");
  if (ord.delta == 5) {
    unsigned long r = ell % 5;
    return r == 1 || r == 4;
  }
  unsigned long r = ell % 8;
  return r == 1 || r == 7;
}

namespace {

std::pair<unsigned long, unsigned long> raw_roots(const RMOrder& ord, unsigned long ell) {
  auto ctx = make_field(ell);
  FqField K(ctx);
  auto rt = sqrt_mod_q(K, K.from_int(ord.delta));
  if (!rt) throw err_not_split("Delta is a non-residue mod " + std::to_string(ell));
  auto inv2 = K.inv(K.from_int(2));
  mpz_class tr = ord.tr_phi;
  mpz_class r1 = K.mul(K.add(K.from_mpz(tr), *rt), inv2);
  mpz_class r2 = K.mul(K.sub(K.from_mpz(tr), *rt), inv2);
  return {mpz_get_ui(r1.get_mpz_t()), mpz_get_ui(r2.get_mpz_t())};
}

// X <= c1 + c2*sqrt(d), all nonnegative, exactly.
bool le_surd(const mpz_class& X, const mpz_class& c1, const mpz_class& c2, long d) {
  if (X <= c1) return true;
  mpz_class lhs = X - c1;
  return lhs * lhs <= c2 * c2 * d;
}

}  // namespace

bool generator_bounds_ok(const RMOrder& ord, const RMOrderElement& alpha, unsigned long ell) {
  mpz_class tr2 = ord.trace(alpha);
  tr2 = abs(tr2);
  mpz_class bdelta2 = alpha.b * alpha.b * ord.delta;
  mpz_class L(ell);
  // Both |2a + b tr| and |b| sqrt(Delta) bounded by 2 e^{R/2} sqrt(ell),
  // i.e. squares bounded by 4 e^R ell.
  if (ord.delta == 5) {
    // 4 e^R ell = 2 ell + 2 ell sqrt(5)
    return le_surd(tr2 * tr2, 2 * L, 2 * L, 5) && le_surd(bdelta2, 2 * L, 2 * L, 5);
  }
  // 4 e^R ell = 4 ell + 4 ell sqrt(2)
  return le_surd(tr2 * tr2, 4 * L, 4 * L, 2) && le_surd(bdelta2, 4 * L, 4 * L, 2);
}

RMOrderElement unit_reduce(const RMOrder& ord, const RMOrderElement& alpha, unsigned long ell) {
  double e1 = std::fabs(ord.embed(alpha, 1));
  double k = std::round(std::log(e1 / std::sqrt(static_cast<double>(ell))) / ord.regulator);
  long ki = static_cast<long>(k);
  RMOrderElement r = alpha;
  RMOrderElement step = (ki > 0) ? ord.unit_inverse() : ord.eps;
  for (long i = 0; i < std::labs(ki); ++i) r = ord.mul(r, step);
  // Unit scaling preserves |N|; re-check exactly.
  mpz_class n = ord.norm(r);
  if (abs(n) != mpz_class(ell))
    throw ComputeError("InternalError", "unit reduction changed the norm");
  return r;
}

SplitPrimeData reduced_generator(const RMOrder& ord, unsigned long ell) {
  if (!is_split(ord, ell))
    throw err_not_split("ell = " + std::to_string(ell) + " is inert in Z[phi]");
  auto [r1, r2] = raw_roots(ord, ell);

  const mpz_class L(ell);
  const double bmax_d =
      2.0 * std::exp(ord.regulator / 2.0) * std::sqrt(static_cast<double>(ell) / ord.delta);
  const long bmax = static_cast<long>(bmax_d) + 2;

  RMOrderElement found{0, 0};
  bool have = false;
  for (long b = 1; b <= bmax && !have; ++b) {
    for (unsigned long r : {r1, r2}) {
      // a = -b r mod ell, centered, plus neighbours.
      mpz_class a0 = (-(mpz_class(b) * r)) % L;
      if (a0 < 0) a0 += L;
      if (2 * a0 > L) a0 -= L;
      for (long off : {0L, -1L, 1L}) {
        RMOrderElement cand{a0 + off * L, b};
        if (abs(ord.norm(cand)) == L) {
          found = cand;
          have = true;
          break;
        }
      }
      if (have) break;
    }
  }
  if (!have)
    throw ComputeError("InternalError",
                       "no generator of norm " + std::to_string(ell) + " found");

  RMOrderElement alpha = unit_reduce(ord, found, ell);
  if (!generator_bounds_ok(ord, alpha, ell)) alpha = found;  // keep the in-bounds candidate

  SplitPrimeData out;
  out.ell = ell;
  out.alpha1 = alpha;
  out.alpha2 = ord.conj(alpha);

  // Pair each generator with the residue of phi modulo its prime:
  // alpha = a + b phi lies in p_i exactly when a + b xbar_i = 0 mod ell.
  auto pairs_with = [&](const RMOrderElement& g, unsigned long r) {
    mpz_class v = (g.a + g.b * r) % L;
    return v == 0;
  };
  if (pairs_with(out.alpha1, r1)) {
    out.xbar1 = r1;
    out.xbar2 = r2;
  } else {
    out.xbar1 = r2;
    out.xbar2 = r1;
  }
  if (!pairs_with(out.alpha1, out.xbar1) || !pairs_with(out.alpha2, out.xbar2) ||
      out.xbar1 == out.xbar2)
    throw ComputeError("InternalError", "generator/root pairing failed");
  return out;
}

std::pair<unsigned long, unsigned long> phi_roots_mod(const RMOrder& ord, unsigned long ell) {
  auto spd = reduced_generator(ord, ell);
  return {spd.xbar1, spd.xbar2};
}

}  // namespace g2rm
