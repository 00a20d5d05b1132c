#include "g2rm/schoof.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "g2rm/divpoly.hpp"

namespace g2rm {

std::string PerEllRecord::log_line() const {
  std::ostringstream os;
  if (ok) {
    os << "ell=" << ell << " m=" << mbar << " n=" << nbar << " ideal_deg=" << ideal_deg
       << " time_s=" << time_s;
  } else {
    os << "# ell=" << ell << " skipped: " << skip_reason;
  }
  return os.str();
}

namespace {

// psi mod one prime above ell, by weighted vote across the components of
// the kernel ideal of its reduced generator.
std::optional<unsigned long> ybar_for_ideal(const RMFamilyInstance& inst,
                                            const KernelIdeal& kernel, unsigned long ell) {
  const FqField K = inst.field();
  const mpz_class& q = K.q();
  const mpz_class qbar = q % ell;

  std::map<unsigned long, unsigned long> votes;  // ybar -> weight
  unsigned long voted_weight = 0;

  std::deque<TriangularIdeal> work(kernel.components.begin(), kernel.components.end());
  while (!work.empty()) {
    TriangularIdeal I = std::move(work.front());
    work.pop_front();
    try {
      QuotField Q(K, I);
      const auto CQ = curve_over_quotient(Q, inst.curve);
      const auto D = generic_divisor(Q);
      // Kernel sanity: Jac[alpha] sits inside Jac[ell].
      if (!mum_is_identity(Q, CQ, scalar_mul(Q, CQ, mpz_class(ell), D))) continue;
      auto Dp = generic_frobenius(Q, D, q);
      if (mum_is_identity(Q, CQ, Dp) || Dp.u.deg() != 2) continue;  // retry other components
      auto Dpp = cantor_add(Q, CQ, generic_frobenius(Q, Dp, q),
                            scalar_mul(Q, CQ, qbar, D));
      auto y = dlog_small(Q, CQ, Dpp, Dp, ell);
      if (!y) continue;
      votes[*y] += I.quotient_degree();
      voted_weight += I.quotient_degree();
    } catch (const IdealSplit& s) {
      auto [a, b] = split_ideal(K, I, s.level, s.factor);
      work.push_back(std::move(a));
      work.push_back(std::move(b));
    } catch (const Error&) {
      continue;  // component-local degeneration; the vote decides
    }
  }

  if (votes.empty()) return std::nullopt;
  unsigned long best = 0, best_w = 0;
  for (const auto& [y, w] : votes)
    if (w > best_w) {
      best = y;
      best_w = w;
    }
  // Majority by quotient degree; anything murkier skips the prime.
  if (2 * best_w <= voted_weight) return std::nullopt;
  return best;
}

unsigned long inv_mod(unsigned long a, unsigned long m) {
  mpz_class r;
  mpz_class am(a), mm(m);
  if (mpz_invert(r.get_mpz_t(), am.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw ComputeError("InternalError", "non-invertible residue");
  return mpz_get_ui(r.get_mpz_t());
}

}  // namespace

ModularConstraint mn_mod_ell(const RMFamilyInstance& inst, unsigned long ell,
                             PerEllRecord* rec) {
  const auto t0 = std::chrono::steady_clock::now();
  if (rec) {
    rec->ell = ell;
    rec->ok = false;
  }
  auto finish_time = [&] {
    if (rec)
      rec->time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  try {
    const RMOrder ord = order_constants(inst.delta);
    if (!is_split(ord, ell)) throw err_prime_skipped("inert in Z[phi]");
    const SplitPrimeData spd = reduced_generator(ord, ell);

    unsigned long ybar[2];
    unsigned long xbar[2] = {spd.xbar1, spd.xbar2};
    const RMOrderElement alphas[2] = {spd.alpha1, spd.alpha2};
    unsigned long ideal_deg = 0;
    for (int i = 0; i < 2; ++i) {
      DivisionPolys dp = alpha_division_polys(inst, alphas[i]);
      KernelIdeal kernel = build_kernel_ideal(inst, dp);
      ideal_deg = std::max(ideal_deg, kernel.total_degree);
      auto y = ybar_for_ideal(inst, kernel, ell);
      if (!y) throw err_prime_skipped("no consistent discrete log across components");
      ybar[i] = *y;
    }

    // Solve ybar_i = mbar + nbar * xbar_i (mod ell); xbar1 != xbar2.
    const unsigned long L = ell;
    unsigned long diff = (xbar[0] + L - xbar[1]) % L;
    unsigned long dinv = inv_mod(diff, L);
    mpz_class nz = ((mpz_class(ybar[0]) + L - ybar[1]) * dinv) % L;
    mpz_class mz = (mpz_class(ybar[0]) + mpz_class(L) * L - nz * xbar[0]) % L;
    unsigned long nbar = mpz_get_ui(nz.get_mpz_t());
    unsigned long mbar = mpz_get_ui(mz.get_mpz_t());

    if (rec) {
      rec->ok = true;
      rec->mbar = mbar;
      rec->nbar = nbar;
      rec->ideal_deg = ideal_deg;
    }
    finish_time();
    return {ell, mbar, nbar};
  } catch (const Error& e) {
    if (rec) rec->skip_reason = e.what();
    finish_time();
    throw err_prime_skipped(e.what());
  }
}

mpz_class m_bound(const mpz_class& q, const RMOrder& ord) {
  // |m| <= 2|tr| sqrt(q/Delta) + 2 sqrt(q); integer over-approximation.
  mpz_class qd = q / ord.delta;
  mpz_class r1, r2;
  mpz_sqrt(r1.get_mpz_t(), qd.get_mpz_t());
  mpz_sqrt(r2.get_mpz_t(), q.get_mpz_t());
  long atr = std::labs(ord.tr_phi);
  return 2 * atr * (r1 + 1) + 2 * (r2 + 1);
}

mpz_class n_bound(const mpz_class& q, const RMOrder& ord) {
  mpz_class qd = q / ord.delta;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), qd.get_mpz_t());
  return 4 * (r + 1);
}

CRTOutcome crt_assemble(const std::vector<ModularConstraint>& cs, const mpz_class& q,
                        const RMOrder& ord) {
  IntegerResidueSystem ms, ns;
  for (const auto& c : cs) {
    ms.add(mpz_class(c.mbar), mpz_class(c.ell));
    ns.add(mpz_class(c.nbar), mpz_class(c.ell));
  }
  CRTOutcome out;
  mpz_class M = crt_modulus(ms);
  out.partial.modulus = M;
  out.partial.m_res = cs.empty() ? mpz_class(0) : integer_crt(ms, false);
  out.partial.n_res = cs.empty() ? mpz_class(0) : integer_crt(ns, false);
  const mpz_class Bm = m_bound(q, ord), Bn = n_bound(q, ord);
  if (M > 2 * Bm && M > 2 * Bn) {
    out.exact = true;
    out.m = integer_crt(ms, true);
    out.n = integer_crt(ns, true);
  }
  return out;
}

namespace {

Divisor random_phi_friendly_divisor(const RMFamilyInstance& inst, ChaChaRng& rng,
                                    Divisor* phi_out) {
  for (;;) {
    Divisor D = random_divisor(inst.curve, rng);
    try {
      Divisor p = phi_eval(inst, D);
      if (phi_out) *phi_out = p;
      return D;
    } catch (const Error&) {
      continue;
    }
  }
}

bool relation_holds(const RMFamilyInstance& inst, const mpz_class& m, const mpz_class& n,
                    ChaChaRng& rng) {
  // (1+q) D = m D + n phi(D) on a fresh random divisor.
  const FqField K = inst.field();
  const auto C = curve_ops(inst.curve);
  Divisor phiD;
  Divisor D = random_phi_friendly_divisor(inst, rng, &phiD);
  auto lhs = scalar_mul(K, C, 1 + K.q(), D);
  auto rhs = cantor_add(K, C, scalar_mul(K, C, m, D), scalar_mul(K, C, n, phiD));
  return mum_eq(K, lhs, rhs);
}

}  // namespace

std::pair<mpz_class, mpz_class> bsgs_complete(const RMFamilyInstance& inst,
                                              const PartialMN& partial, ChaChaRng& rng) {
  const FqField K = inst.field();
  const auto C = curve_ops(inst.curve);
  const mpz_class& q = K.q();
  const RMOrder ord = order_constants(inst.delta);
  const mpz_class Bm = m_bound(q, ord), Bn = n_bound(q, ord);
  const mpz_class& M = partial.modulus;
  const mpz_class& mr = partial.m_res;
  const mpz_class& nr = partial.n_res;

  // m = mr + M i in [-Bm, Bm]; n = nr + M j in [-Bn, Bn].
  auto range_of = [&](const mpz_class& r, const mpz_class& B) {
    mpz_class lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), mpz_class(-B - r).get_mpz_t(), M.get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), mpz_class(B - r).get_mpz_t(), M.get_mpz_t());
    return std::make_pair(lo, hi);
  };
  auto [i0, i1] = range_of(mr, Bm);
  auto [j0, j1] = range_of(nr, Bn);
  if (i0 > i1 || j0 > j1) throw err_not_found("empty BSGS search rectangle");

  Divisor phiD;
  Divisor D = random_phi_friendly_divisor(inst, rng, &phiD);

  // R = (1+q) D - mr D - nr phi(D); seek R = [M i] D + [M j] phi(D).
  auto T0 = scalar_mul(K, C, 1 + q, D);
  auto R = cantor_sub(K, C, T0, scalar_mul(K, C, mr, D));
  R = cantor_sub(K, C, R, scalar_mul(K, C, nr, phiD));
  auto DM = scalar_mul(K, C, M, D);
  auto EM = scalar_mul(K, C, M, phiD);

  // Baby steps over i.
  std::unordered_map<std::string, mpz_class> table;
  {
    auto X = scalar_mul(K, C, i0 * M, D);
    for (mpz_class i = i0; i <= i1; ++i) {
      table.emplace(divisor_key(K, X), i);
      X = cantor_add(K, C, X, DM);
    }
  }
  // Giant steps over j.
  std::vector<std::pair<mpz_class, mpz_class>> candidates;
  {
    auto Y = cantor_sub(K, C, R, scalar_mul(K, C, j0 * M, phiD));
    for (mpz_class j = j0; j <= j1; ++j) {
      auto it = table.find(divisor_key(K, Y));
      if (it != table.end()) candidates.emplace_back(mr + M * it->second, nr + M * j);
      Y = cantor_sub(K, C, Y, EM);
    }
  }
  if (candidates.empty()) throw err_not_found("no (m, n) matched in the rectangle");

  // Cross-check survivors on fresh random divisors until unique.
  int extra = 0;
  while (candidates.size() > 1 && extra < 64) {
    std::vector<std::pair<mpz_class, mpz_class>> keep;
    for (const auto& cand : candidates) {
      ChaChaRng probe(rng.next_u64());
      if (relation_holds(inst, cand.first, cand.second, probe)) keep.push_back(cand);
    }
    candidates = std::move(keep);
    ++extra;
    if (candidates.empty()) throw err_not_found("all BSGS candidates failed cross-checks");
  }
  if (candidates.size() > 1) throw err_ambiguous("multiple (m, n) survive cross-checking");
  for (int i = 0; i < 3; ++i)
    if (!relation_holds(inst, candidates[0].first, candidates[0].second, rng))
      throw err_not_found("BSGS candidate failed final cross-check");
  return candidates[0];
}

CharpolyResult charpoly_from_mn(const mpz_class& m, const mpz_class& n, const mpz_class& q,
                                const RMOrder& ord) {
  CharpolyResult r;
  r.m = m;
  r.n = n;
  r.s1 = 2 * m + n * ord.tr_phi;
  mpz_class disc0 = r.s1 * r.s1 - n * n * ord.delta;
  if (disc0 % 4 != 0) throw err_inconsistent_parity("s1^2 - n^2 Delta not divisible by 4");
  r.s2 = disc0 / 4;
  // Weil: |s1| <= 4 sqrt(q); Rueck: s1^2 >= 4 s2 and s2 + 4q >= 2|s1|.
  if (r.s1 * r.s1 > 16 * q) throw err_rueck_violation("|s1| exceeds the Weil bound");
  if (r.s1 * r.s1 - 4 * r.s2 < 0) throw err_rueck_violation("s1^2 - 4 s2 < 0");
  mpz_class abs_s1 = abs(r.s1);
  if (r.s2 + 4 * q < 2 * abs_s1) throw err_rueck_violation("s2 + 4q < 2|s1|");
  r.order = jacobian_order(r.s1, r.s2, q);
  r.twist_order = twisted_order(r.s1, r.s2, q);
  return r;
}

std::vector<unsigned long> split_prime_schedule(const RMOrder& ord, unsigned long lmax) {
  std::vector<unsigned long> out;
  mpz_class p = 2;
  while (true) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    unsigned long ell = mpz_get_ui(p.get_mpz_t());
    if (ell > lmax) break;
    if (static_cast<unsigned long>(ord.delta) % ell == 0) continue;  // ramified: skipped
    if (ord.delta == 8 && ell == 2) continue;
    if (is_split(ord, ell)) out.push_back(ell);
  }
  return out;
}

namespace {

std::map<unsigned long, PerEllRecord> load_checkpoint(const std::string& path) {
  std::map<unsigned long, PerEllRecord> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    PerEllRecord r;
    std::istringstream ss(line);
    std::string tok;
    bool have_ell = false, have_m = false, have_n = false;
    while (ss >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) continue;
      std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
      if (k == "ell") r.ell = std::stoul(v), have_ell = true;
      else if (k == "m") r.mbar = std::stoul(v), have_m = true;
      else if (k == "n") r.nbar = std::stoul(v), have_n = true;
      else if (k == "ideal_deg") r.ideal_deg = std::stoul(v);
      else if (k == "time_s") r.time_s = std::stod(v);
    }
    if (have_ell && have_m && have_n) {
      r.ok = true;
      out[r.ell] = r;
    }
  }
  return out;
}

}  // namespace

CharpolyResult count_points(const RMFamilyInstance& inst, const CountConfig& cfg) {
  const FqField K = inst.field();
  const mpz_class& q = K.q();
  const RMOrder ord = order_constants(inst.delta);
  const mpz_class Bm = m_bound(q, ord), Bn = n_bound(q, ord);
  const mpz_class target = 4 * 2 * std::max(Bm, Bn);  // 4x the interval widths

  auto done = load_checkpoint(cfg.checkpoint_path);
  std::mutex io_mutex;
  std::ofstream ckpt;
  if (!cfg.checkpoint_path.empty())
    ckpt.open(cfg.checkpoint_path, std::ios::app);

  std::vector<unsigned long> schedule = split_prime_schedule(ord, cfg.lmax);

  std::vector<PerEllRecord> records(schedule.size());
  auto run_one = [&](size_t idx) {
    unsigned long ell = schedule[idx];
    {
      std::lock_guard<std::mutex> lk(io_mutex);
      auto it = done.find(ell);
      if (it != done.end()) {
        records[idx] = it->second;
        return;
      }
    }
    PerEllRecord rec;
    try {
      mn_mod_ell(inst, ell, &rec);
    } catch (const Error&) {
      // rec carries the reason
    }
    {
      std::lock_guard<std::mutex> lk(io_mutex);
      records[idx] = rec;
      if (ckpt.is_open()) {
        ckpt << rec.log_line() << "\n";
        ckpt.flush();
      }
      if (cfg.log_stream) (*cfg.log_stream) << rec.log_line() << "\n";
    }
  };

  // Take primes in order until the collected modulus clears the target;
  // skipped primes pull more of the schedule in.
  size_t next = 0;
  mpz_class M = 1;
  std::atomic<size_t> cursor{0};
  auto need_more = [&]() { return M < target && next < schedule.size(); };
  while (need_more()) {
    // Launch a batch in parallel.
    size_t batch_begin = next;
    mpz_class projected = M;
    size_t batch_end = batch_begin;
    while (batch_end < schedule.size() && projected < target) {
      projected *= schedule[batch_end];
      ++batch_end;
    }
    const int nthreads = std::max(1, cfg.threads);
    cursor.store(batch_begin);
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          size_t i = cursor.fetch_add(1);
          if (i >= batch_end) return;
          run_one(i);
        }
      });
    for (auto& th : pool) th.join();
    for (size_t i = batch_begin; i < batch_end; ++i)
      if (records[i].ok) M *= schedule[i];
    next = batch_end;
  }

  CharpolyResult result;
  std::vector<ModularConstraint> cs;
  for (size_t i = 0; i < next; ++i) {
    const auto& r = records[i];
    result.log.push_back(r);
    if (r.ok) {
      cs.push_back({r.ell, r.mbar, r.nbar});
      result.primes_used.push_back(r.ell);
    } else {
      result.skipped.push_back(r.ell);
    }
  }

  auto crt = crt_assemble(cs, q, ord);
  ChaChaRng rng(cfg.seed);
  mpz_class m, n;
  if (crt.exact && crt.partial.modulus >= target) {
    m = crt.m;
    n = crt.n;
  } else if (crt.exact) {
    m = crt.m;
    n = crt.n;
    if (cfg.use_bsgs) {
      // Below the safety margin: cross-check through the BSGS path.
      auto [mb, nb] = bsgs_complete(inst, crt.partial, rng);
      if (mb != m || nb != n)
        throw err_ambiguous("CRT result disagrees with BSGS cross-check");
    }
  } else {
    if (!cfg.use_bsgs)
      throw err_prime_skipped("modulus " + crt.partial.modulus.get_str() +
                              " insufficient and BSGS disabled");
    std::tie(m, n) = bsgs_complete(inst, crt.partial, rng);
  }

  auto chi = charpoly_from_mn(m, n, q, ord);
  chi.primes_used = result.primes_used;
  chi.skipped = result.skipped;
  chi.log = result.log;

  // Final verification: chi(1) annihilates random divisors.
  const auto C = curve_ops(inst.curve);
  for (int i = 0; i < 3; ++i) {
    Divisor D = random_divisor(inst.curve, rng);
    if (!mum_is_identity(K, C, scalar_mul(K, C, chi.order, D)))
      throw ComputeError("VerificationFailed", "chi(1) does not annihilate a random divisor");
  }
  return chi;
}

}  // namespace g2rm
