#include "g2rm/crt.hpp"

#include "g2rm/errors.hpp"

namespace g2rm {

mpz_class crt_modulus(const IntegerResidueSystem& sys) {
  mpz_class m = 1;
  for (const auto& p : sys.pairs) m *= p.modulus;
  return m;
}

mpz_class integer_crt(const IntegerResidueSystem& sys, bool centered) {
  mpz_class x = 0;
  mpz_class m = 1;
  for (const auto& p : sys.pairs) {
    if (p.modulus < 1) throw err_not_coprime();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), p.modulus.get_mpz_t());
    if (g != 1) throw err_not_coprime();
    // Solve x' = x mod m, x' = residue mod modulus.
    mpz_class minv;
    if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), p.modulus.get_mpz_t()) == 0)
      throw err_not_coprime();
    mpz_class t = ((p.residue - x) * minv) % p.modulus;
    if (t < 0) t += p.modulus;
    x += m * t;
    m *= p.modulus;
  }
  x %= m;
  if (x < 0) x += m;
  if (centered) {
    // Shift into (-M/2, M/2].
    if (2 * x > m) x -= m;
  }
  return x;
}

}  // namespace g2rm
