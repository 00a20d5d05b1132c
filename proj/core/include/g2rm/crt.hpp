#ifndef G2RM_CRT_HPP
#define G2RM_CRT_HPP

#include <gmpxx.h>

#include <vector>

namespace g2rm {

// Residue system for integer CRT reconstruction.
struct IntegerResidueSystem {
  struct Pair {
    mpz_class residue;
    mpz_class modulus;
  };
  std::vector<Pair> pairs;

  void add(const mpz_class& residue, const mpz_class& modulus) {
    pairs.push_back({residue, modulus});
  }
};

// Unique residue modulo the product of the (pairwise coprime) moduli.
// With centered=true the result lies in (-M/2, M/2].
// Throws NotCoprime when moduli share a factor.
mpz_class integer_crt(const IntegerResidueSystem& sys, bool centered = false);

// Product of the moduli.
mpz_class crt_modulus(const IntegerResidueSystem& sys);

}  // namespace g2rm

#endif  // G2RM_CRT_HPP
