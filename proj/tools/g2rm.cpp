// Command-line driver: point counting, order verification, curve search,
// division-polynomial dumps and the per-prime cost benchmark.
//
// Exit codes: 0 ok, 1 input error, 2 computation skipped/failed,
// 3 verification failed.

#include <chrono>
#include <cmath>
#include <iostream>

#include <CLI11.hpp>

#include "g2rm/divpoly.hpp"
#include "g2rm/search.hpp"

using namespace g2rm;

namespace {

void print_result(const CharpolyResult& r) {
  for (const auto& rec : r.log) std::cout << rec.log_line() << "\n";
  std::cout << "m = " << r.m << "\n";
  std::cout << "n = " << r.n << "\n";
  std::cout << "s1 = " << r.s1 << "\n";
  std::cout << "s2 = " << r.s2 << "\n";
  std::cout << "order = " << r.order << "\n";
  std::cout << "twist_order = " << r.twist_order << "\n";
  std::cout << "primes_used = ";
  for (size_t i = 0; i < r.primes_used.size(); ++i)
    std::cout << (i ? "," : "") << r.primes_used[i];
  std::cout << "\n";
  std::cout << "skipped = ";
  for (size_t i = 0; i < r.skipped.size(); ++i) std::cout << (i ? "," : "") << r.skipped[i];
  std::cout << "\n";
}

void dump_poly(const char* name, const Poly<FqField>& p) {
  std::cout << name << "_deg = " << p.deg() << "\n";
  std::cout << name << " = ";
  for (size_t i = 0; i < p.c.size(); ++i) std::cout << (i ? "," : "") << p.c[i];
  if (p.c.empty()) std::cout << "0";
  std::cout << "\n";
}

int cmd_count(const std::string& specfile, unsigned long lmax, int threads,
              std::uint64_t seed, const std::string& bsgs, const std::string& checkpoint) {
  auto inst = instance_from_spec(parse_curve_spec_file(specfile));
  CountConfig cfg;
  cfg.lmax = lmax;
  cfg.threads = threads;
  cfg.seed = seed;
  cfg.use_bsgs = (bsgs != "off");
  cfg.checkpoint_path = checkpoint;
  auto r = count_points(inst, cfg);
  print_result(r);
  return 0;
}

int cmd_verify(const std::string& specfile, const std::string& claimed, int kdiv,
               std::uint64_t seed) {
  auto curve = curve_from_spec(parse_curve_spec_file(specfile));
  mpz_class N(claimed);
  const FqField K = curve.field();
  const auto C = curve_ops(curve);
  bool ok = in_weil_interval(N, K.q());
  if (!ok) {
    std::cout << "verify = fail (outside the Weil interval)\n";
    return 3;
  }
  ChaChaRng rng(seed);
  for (int i = 0; i < kdiv; ++i) {
    Divisor D = random_divisor(curve, rng);
    if (!mum_is_identity(K, C, scalar_mul(K, C, N, D))) {
      std::cout << "verify = fail (divisor " << i << " not annihilated)\n";
      return 3;
    }
  }
  std::cout << "verify = pass (" << kdiv << " random divisors annihilated)\n";
  return 0;
}

int cmd_search(const std::string& q, const std::string& family, unsigned long lmax,
               bool twist_secure, std::uint64_t seed, unsigned long max_candidates,
               int rounds, int threads) {
  SearchPolicy policy;
  policy.lmax = lmax;
  policy.twist_secure = twist_secure;
  policy.seed = seed;
  policy.max_candidates = max_candidates;
  policy.prime_rounds = rounds;
  policy.threads = threads;
  std::cout << "seed = " << seed << "\n";
  auto stats = search_curves(family, mpz_class(q), policy, [&](const SearchHit& hit) {
    std::cout << "hit after " << hit.candidates_tried << " candidates\n";
    std::cout << serialize_curve_spec(hit.spec);
    std::cout << "order = " << hit.chi.order << "\n";
    std::cout << "twist_order = " << hit.chi.twist_order << "\n";
    std::cout << "order_prime = " << (hit.order_prime ? "yes" : "no") << "\n";
    std::cout << "twist_prime = " << (hit.twist_prime ? "yes" : "no") << "\n";
    return true;  // keep searching until max_candidates
  });
  std::cout << "candidates = " << stats.candidates << "\n";
  std::cout << "early_aborts = " << stats.early_aborts << "\n";
  std::cout << "survivors = " << stats.survivors << "\n";
  return 0;
}

int cmd_divpoly(const std::string& specfile, unsigned long ell, long k) {
  auto spec = parse_curve_spec_file(specfile);
  DivisionPolys dp;
  if (ell) {
    auto inst = instance_from_spec(spec);
    auto spd = reduced_generator(order_constants(inst.delta), ell);
    std::cout << "alpha = " << spd.alpha1.a << " + " << spd.alpha1.b << "*phi\n";
    dp = alpha_division_polys(inst, spd.alpha1);
  } else {
    dp = k_division_polys(curve_from_spec(spec), k);
  }
  dump_poly("d2", dp.d2);
  dump_poly("d1", dp.d1);
  dump_poly("d0", dp.d0);
  dump_poly("e2", dp.e2);
  dump_poly("e1", dp.e1);
  dump_poly("e0", dp.e0);
  return 0;
}

int cmd_bench(const std::string& q, const std::string& t, unsigned long lmax) {
  auto inst = make_ttv(make_field(q), mpz_class(t));
  const RMOrder ord = order_constants(inst.delta);
  auto ells = split_prime_schedule(ord, lmax);
  std::vector<double> lx, ly;
  std::cout << "bench curve: tautz q=" << q << " t=" << t << "\n";
  for (unsigned long ell : ells) {
    PerEllRecord rec;
    try {
      mn_mod_ell(inst, ell, &rec);
    } catch (const Error&) {
    }
    std::cout << rec.log_line() << "\n";
    if (rec.ok) {
      lx.push_back(std::log(static_cast<double>(ell)));
      ly.push_back(std::log(std::max(rec.time_s, 1e-9)));
    }
  }
  if (lx.size() < 2) {
    std::cout << "bench = fail (fewer than two data points)\n";
    return 2;
  }
  // Least-squares slope of log(time) vs log(ell).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(lx.size());
  for (size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const bool monotone = ly.back() > ly.front();
  std::cout << "loglog_slope = " << slope << "\n";
  std::cout << "monotone = " << (monotone ? "yes" : "no") << "\n";
  // Per-prime cost grows roughly like ell^3 at fixed q; the band is generous.
  const bool ok = monotone && slope >= 1.5 && slope <= 4.0;
  std::cout << "bench = " << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genus-2 real-multiplication point counting"};
  app.require_subcommand(1);

  std::string specfile, claimed, qstr, family = "tautz", bsgs = "on", checkpoint;
  std::string bench_q = "2305843009213693951", bench_t = "7";
  unsigned long lmax = 131, ell = 0, max_candidates = 16;
  long kmul = 2;
  int threads = 1, kdiv = 20, rounds = 64;
  std::uint64_t seed = 1;
  bool twist_secure = false;

  auto* count = app.add_subcommand("count", "compute the Jacobian order of an RM curve");
  count->add_option("spec", specfile, "curve-spec file")->required();
  count->add_option("--lmax", lmax, "largest split prime to use");
  count->add_option("--threads", threads, "parallel per-prime workers");
  count->add_option("--seed", seed, "PRNG seed");
  count->add_option("--bsgs", bsgs, "on|off: baby-step giant-step completion");
  count->add_option("--checkpoint", checkpoint, "resumable per-prime state file");

  auto* verify = app.add_subcommand("verify", "check a claimed Jacobian order");
  verify->add_option("spec", specfile, "curve-spec file")->required();
  verify->add_option("order", claimed, "claimed group order")->required();
  verify->add_option("--k", kdiv, "number of random divisors");
  verify->add_option("--seed", seed, "PRNG seed");

  auto* search = app.add_subcommand("search", "early-abort cryptographic curve search");
  search->add_option("--q", qstr, "field size (decimal)")->required();
  search->add_option("--family", family, "tautz|humbert5|mestre8");
  search->add_option("--lmax", lmax, "CRT bound");
  search->add_flag("--twist-secure", twist_secure, "require prime twist order too");
  search->add_option("--seed", seed, "PRNG seed");
  search->add_option("--max-candidates", max_candidates, "stop after this many candidates");
  search->add_option("--rounds", rounds, "Miller-Rabin rounds");
  search->add_option("--threads", threads, "parallel per-prime workers");

  auto* divp = app.add_subcommand("divpoly", "dump division polynomials");
  divp->add_option("spec", specfile, "curve-spec file")->required();
  divp->add_option("--ell", ell, "split prime: use the reduced generator above it");
  divp->add_option("--k", kmul, "integer multiplication-by-k");

  auto* bench = app.add_subcommand("bench", "per-prime cost growth measurement");
  bench->add_option("--q", bench_q, "bench field (decimal)");
  bench->add_option("--t", bench_t, "bench curve parameter");
  bench->add_option("--lmax", lmax, "largest split prime (default 31 for bench)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(count))
      return cmd_count(specfile, lmax, threads, seed, bsgs, checkpoint);
    if (app.got_subcommand(verify)) return cmd_verify(specfile, claimed, kdiv, seed);
    if (app.got_subcommand(search))
      return cmd_search(qstr, family, lmax, twist_secure, seed, max_candidates, rounds,
                        threads);
    if (app.got_subcommand(divp)) return cmd_divpoly(specfile, ell, kmul);
    if (app.got_subcommand(bench)) {
      unsigned long blmax = (lmax == 131) ? 31 : lmax;
      return cmd_bench(bench_q, bench_t, blmax);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ComputeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
