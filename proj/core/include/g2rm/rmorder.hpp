#ifndef G2RM_RMORDER_HPP
#define G2RM_RMORDER_HPP

#include <gmpxx.h>

#include <utility>

namespace g2rm {

// Element a + b*phi of Z[phi].
struct RMOrderElement {
  mpz_class a, b;
};

// The real quadratic order Z[phi] for Delta in {5, 8}; table-driven
// constants, validated against a continued-fraction oracle in the tests.
struct RMOrder {
  int delta;
  long tr_phi;
  long n_phi;
  RMOrderElement eps;  // fundamental unit
  double regulator;
  double phi_emb1;  // embedding with |eps| > 1
  double phi_emb2;

  mpz_class norm(const RMOrderElement& x) const {
    return x.a * x.a + x.a * x.b * tr_phi + x.b * x.b * n_phi;
  }
  mpz_class trace(const RMOrderElement& x) const { return 2 * x.a + x.b * tr_phi; }
  RMOrderElement conj(const RMOrderElement& x) const { return {x.a + x.b * tr_phi, -x.b}; }
  RMOrderElement mul(const RMOrderElement& x, const RMOrderElement& y) const {
    // phi^2 = tr*phi - n
    return {x.a * y.a - x.b * y.b * n_phi, x.a * y.b + x.b * y.a + x.b * y.b * tr_phi};
  }
  RMOrderElement unit_inverse() const;  // eps^{-1}
  double embed(const RMOrderElement& x, int which) const {
    return mpz_get_d(x.a.get_mpz_t()) +
           mpz_get_d(x.b.get_mpz_t()) * (which == 1 ? phi_emb1 : phi_emb2);
  }
};

// Split-prime package: generators of the two primes above ell and the
// residues of phi modulo each, paired so that a_i + b_i * xbar_i = 0 mod ell.
struct SplitPrimeData {
  unsigned long ell;
  RMOrderElement alpha1, alpha2;
  unsigned long xbar1, xbar2;
};

RMOrder order_constants(int delta);

// true iff ell splits in Z[phi]; RamifiedPrime when ell | Delta.
bool is_split(const RMOrder& ord, unsigned long ell);

// Both roots of T^2 - tr T + n mod ell, ordered to match reduced_generator.
std::pair<unsigned long, unsigned long> phi_roots_mod(const RMOrder& ord, unsigned long ell);

// Generator of each prime above ell with Lemma-size coefficients
// (|2a + b tr| and |b| sqrt(Delta) both at most 2 e^{R/2} sqrt(ell)).
SplitPrimeData reduced_generator(const RMOrder& ord, unsigned long ell);

// One unit-scaling pass: alpha * eps^{-k} with k = round(log(|alpha_1|/sqrt(ell))/R).
RMOrderElement unit_reduce(const RMOrder& ord, const RMOrderElement& alpha, unsigned long ell);

// Exact check of the Lemma coefficient bounds.
bool generator_bounds_ok(const RMOrder& ord, const RMOrderElement& alpha, unsigned long ell);

}  // namespace g2rm

#endif  // G2RM_RMORDER_HPP
