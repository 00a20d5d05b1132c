#ifndef G2RM_SEARCH_HPP
#define G2RM_SEARCH_HPP

#include <functional>
#include <iosfwd>

#include "g2rm/schoof.hpp"

namespace g2rm {

struct SearchPolicy {
  unsigned long lmax = 131;      // CRT bound; >= 11
  bool twist_secure = false;     // require both orders prime
  int prime_rounds = 64;         // Miller-Rabin rounds; >= 40
  std::uint64_t seed = 1;
  unsigned long max_candidates = 0;  // 0 = run until stopped
  int threads = 1;
};

struct SearchHit {
  CurveSpecText spec;
  CharpolyResult chi;
  bool order_prime = false;
  bool twist_prime = false;
  unsigned long candidates_tried = 0;
};

struct SearchStats {
  unsigned long candidates = 0;
  unsigned long early_aborts = 0;
  unsigned long survivors = 0;
};

// Early-abort curve search: a candidate is dropped as soon as the per-prime
// residues force both the order and the twist order composite (or either,
// when twist security is required).  Survivors get a full count and
// primality testing; hits stream through `emit` (return false to stop).
SearchStats search_curves(const std::string& family, const mpz_class& q,
                          const SearchPolicy& policy,
                          const std::function<bool(const SearchHit&)>& emit,
                          std::ostream* log = nullptr);

// chi(1) mod ell and chi(-1) mod ell from a per-prime constraint.
std::pair<unsigned long, unsigned long> order_residues_mod_ell(const ModularConstraint& c,
                                                               const mpz_class& q,
                                                               const RMOrder& ord);

}  // namespace g2rm

#endif  // G2RM_SEARCH_HPP
