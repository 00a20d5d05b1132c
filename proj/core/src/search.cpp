#include "g2rm/search.hpp"

#include <ostream>

#include "g2rm/divpoly.hpp"

namespace g2rm {

std::pair<unsigned long, unsigned long> order_residues_mod_ell(const ModularConstraint& c,
                                                               const mpz_class& q,
                                                               const RMOrder& ord) {
  const unsigned long L = c.ell;
  mpz_class Lz(L);
  mpz_class s1 = (2 * mpz_class(c.mbar) + mpz_class(c.nbar) * ord.tr_phi) % Lz;
  if (s1 < 0) s1 += Lz;
  mpz_class inv4;
  mpz_invert(inv4.get_mpz_t(), mpz_class(4).get_mpz_t(), Lz.get_mpz_t());
  mpz_class s2 = ((s1 * s1 - mpz_class(c.nbar) * c.nbar * ord.delta) % Lz) * inv4 % Lz;
  if (s2 < 0) s2 += Lz;
  mpz_class qp1 = (q + 1) % Lz;
  mpz_class ordm = (qp1 * qp1 - s1 * qp1 + s2) % Lz;
  if (ordm < 0) ordm += Lz;
  mpz_class twm = (qp1 * qp1 + s1 * qp1 + s2) % Lz;
  if (twm < 0) twm += Lz;
  return {mpz_get_ui(ordm.get_mpz_t()), mpz_get_ui(twm.get_mpz_t())};
}

namespace {

RMFamilyInstance make_candidate(const std::string& family, const FieldCtxPtr& ctx,
                                ChaChaRng& rng, CurveSpecText* spec) {
  FqField K(ctx);
  auto rand_param = [&] { return K.random(rng); };
  spec->q = K.q().get_str();
  spec->family = family;
  if (family == "tautz") {
    mpz_class t = rand_param();
    spec->t = t.get_str();
    return make_ttv(ctx, t);
  }
  mpz_class s = rand_param(), t = rand_param();
  spec->s = s.get_str();
  spec->t = t.get_str();
  if (family == "humbert5") return make_humbert5(ctx, s, t);
  if (family == "mestre8") return make_mestre8(ctx, s, t);
  throw InputError("BadCurveSpec", "search needs an RM family, got " + family);
}

}  // namespace

SearchStats search_curves(const std::string& family, const mpz_class& q,
                          const SearchPolicy& policy,
                          const std::function<bool(const SearchHit&)>& emit,
                          std::ostream* log) {
  if (policy.lmax < 11) throw InputError("BadPolicy", "lmax must be >= 11");
  if (policy.prime_rounds < 40) throw InputError("BadPolicy", "primality rounds must be >= 40");

  auto ctx = make_field(q);
  ChaChaRng rng(policy.seed);
  SearchStats stats;

  for (;;) {
    if (policy.max_candidates && stats.candidates >= policy.max_candidates) break;
    ++stats.candidates;

    CurveSpecText spec;
    RMFamilyInstance inst;
    try {
      inst = make_candidate(family, ctx, rng, &spec);
    } catch (const InputError& e) {
      // Field-level precondition: no candidate over this q can work.
      if (std::string(e.key()) == "TauNotRational") throw;
      continue;  // singular parameters: next candidate
    }

    const RMOrder ord = order_constants(inst.delta);
    auto schedule = split_prime_schedule(ord, policy.lmax);

    bool order_comp = false, twist_comp = false, aborted = false;
    std::vector<ModularConstraint> cs;
    for (unsigned long ell : schedule) {
      ModularConstraint c;
      try {
        c = mn_mod_ell(inst, ell);
      } catch (const Error&) {
        continue;  // skipped prime: no divisibility information
      }
      cs.push_back(c);
      auto [om, tm] = order_residues_mod_ell(c, q, ord);
      if (om == 0) order_comp = true;
      if (tm == 0) twist_comp = true;
      const bool give_up = policy.twist_secure ? (order_comp || twist_comp)
                                               : (order_comp && twist_comp);
      if (give_up) {
        aborted = true;
        if (log)
          (*log) << "candidate " << stats.candidates << ": abort at ell=" << ell << "\n";
        break;
      }
    }
    if (aborted) {
      ++stats.early_aborts;
      continue;
    }

    // Survivor: complete the count from the collected congruences.
    ++stats.survivors;
    mpz_class m, n;
    try {
      auto crt = crt_assemble(cs, q, ord);
      if (crt.exact) {
        m = crt.m;
        n = crt.n;
      } else {
        ChaChaRng brng(rng.next_u64());
        std::tie(m, n) = bsgs_complete(inst, crt.partial, brng);
      }
    } catch (const Error& e) {
      if (log) (*log) << "candidate " << stats.candidates << ": completion failed: "
                      << e.what() << "\n";
      continue;
    }

    CharpolyResult chi;
    try {
      chi = charpoly_from_mn(m, n, q, ord);
    } catch (const Error&) {
      continue;
    }

    SearchHit hit;
    hit.spec = spec;
    hit.chi = chi;
    hit.candidates_tried = stats.candidates;
    hit.order_prime =
        mpz_probab_prime_p(chi.order.get_mpz_t(), policy.prime_rounds) > 0;
    hit.twist_prime =
        mpz_probab_prime_p(chi.twist_order.get_mpz_t(), policy.prime_rounds) > 0;

    const bool good =
        policy.twist_secure ? (hit.order_prime && hit.twist_prime)
                            : (hit.order_prime || hit.twist_prime);
    if (!good) continue;
    if (!emit(hit)) break;
  }
  return stats;
}

}  // namespace g2rm
