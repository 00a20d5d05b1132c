#ifndef G2RM_JACOBIAN_HPP
#define G2RM_JACOBIAN_HPP

#include <utility>

#include "g2rm/curve.hpp"
#include "g2rm/rng.hpp"

namespace g2rm {

// Sum of two uniformly sampled curve points (random x, square-root retry on
// non-residues); deterministic for a fixed generator state.
Divisor random_divisor(const CurveModel& c, ChaChaRng& rng);

// Exact (s1, s2) by point enumeration over F_q and F_{q^2}.  Desk-scale
// oracle: q <= 2^16, errors TooLarge beyond.  The quadratic-extension loop
// is self-contained 64-bit arithmetic, independent of the library field
// layer.
std::pair<mpz_class, mpz_class> brute_force_charpoly(const CurveModel& c);

// chi(1) and chi(-1) from (s1, s2).
mpz_class jacobian_order(const mpz_class& s1, const mpz_class& s2, const mpz_class& q);
mpz_class twisted_order(const mpz_class& s1, const mpz_class& s2, const mpz_class& q);

// Quadratic twist model: y^2 = c*f(x) for the smallest non-residue c.
CurveModel quadratic_twist(const CurveModel& c);

// Is n inside the Weil interval [(sqrt(q)-1)^4, (sqrt(q)+1)^4]?  Exact
// integer comparison.
bool in_weil_interval(const mpz_class& n, const mpz_class& q);

}  // namespace g2rm

#endif  // G2RM_JACOBIAN_HPP
