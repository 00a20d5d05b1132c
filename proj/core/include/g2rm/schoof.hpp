#ifndef G2RM_SCHOOF_HPP
#define G2RM_SCHOOF_HPP

#include <string>
#include <vector>

#include "g2rm/crt.hpp"
#include "g2rm/kernel.hpp"
#include "g2rm/rmorder.hpp"

namespace g2rm {

struct ModularConstraint {
  unsigned long ell;
  unsigned long mbar;
  unsigned long nbar;
};

struct PerEllRecord {
  unsigned long ell = 0;
  bool ok = false;
  unsigned long mbar = 0;
  unsigned long nbar = 0;
  unsigned long ideal_deg = 0;
  double time_s = 0.0;
  std::string skip_reason;

  std::string log_line() const;
};

struct CharpolyResult {
  mpz_class m, n, s1, s2;
  mpz_class order, twist_order;
  std::vector<unsigned long> primes_used;
  std::vector<unsigned long> skipped;
  std::vector<PerEllRecord> log;
};

// One prime of the split-prime Schoof step: builds the kernel ideals of the
// two reduced generators above ell, computes psi mod each prime by a
// discrete log in the generic cyclic group, and solves for (m, n) mod ell.
// Component disagreements and degenerate kernels raise PrimeSkipped.
ModularConstraint mn_mod_ell(const RMFamilyInstance& inst, unsigned long ell,
                             PerEllRecord* rec = nullptr);

// Discrete log in <Dp>: smallest y in [0, ell) with Dpp = [y] Dp, by linear
// scan (ell stays small at desk scale).  nullopt when no solution exists.
template <class F>
std::optional<unsigned long> dlog_small(const F& K, const CurvePoly<F>& C,
                                        const MumfordDiv<F>& Dpp, const MumfordDiv<F>& Dp,
                                        unsigned long ell) {
  MumfordDiv<F> X = mum_identity(K, C);
  for (unsigned long k = 0; k < ell; ++k) {
    if (mum_eq(K, X, Dpp)) return k;
    X = cantor_add(K, C, X, Dp);
  }
  return std::nullopt;
}

// Eq.-(7)-style rectangle bounds (slight integer over-approximations).
mpz_class m_bound(const mpz_class& q, const RMOrder& ord);
mpz_class n_bound(const mpz_class& q, const RMOrder& ord);

struct PartialMN {
  mpz_class m_res, n_res;  // in [0, modulus)
  mpz_class modulus;
};

struct CRTOutcome {
  bool exact = false;
  mpz_class m, n;  // centered values when exact
  PartialMN partial;
};

// Centered CRT of the per-prime constraints; exact when the modulus covers
// the full (m, n) rectangle widths.
CRTOutcome crt_assemble(const std::vector<ModularConstraint>& cs, const mpz_class& q,
                        const RMOrder& ord);

// Baby-step giant-step completion over the congruence classes inside the
// rectangle, cross-checked on extra random divisors until unique.
std::pair<mpz_class, mpz_class> bsgs_complete(const RMFamilyInstance& inst,
                                              const PartialMN& partial, ChaChaRng& rng);

// (m, n) -> full characteristic-polynomial data, with parity and
// Weil/Rueck-domain validation.
CharpolyResult charpoly_from_mn(const mpz_class& m, const mpz_class& n, const mpz_class& q,
                                const RMOrder& ord);

struct CountConfig {
  unsigned long lmax = 131;
  bool use_bsgs = true;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string checkpoint_path;
  std::ostream* log_stream = nullptr;  // per-ell log lines, serialized
};

// The full pipeline: split primes in increasing order until the CRT modulus
// clears a 4x safety margin over the rectangle widths (or lmax is hit),
// then BSGS completion and a final random-divisor verification.
CharpolyResult count_points(const RMFamilyInstance& inst, const CountConfig& cfg);

// Split primes of the order, ascending, ramified primes excluded.
std::vector<unsigned long> split_prime_schedule(const RMOrder& ord, unsigned long lmax);

}  // namespace g2rm

#endif  // G2RM_SCHOOF_HPP
