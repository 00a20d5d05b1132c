#include "g2rm/fq.hpp"

namespace g2rm {

FieldContext::FieldContext(mpz_class q) : q_(std::move(q)) {
  if (q_ < 2) throw err_bad_field("modulus must be >= 2");
  // 65 Miller-Rabin rounds: error probability < 4^-65 < 2^-128.
  int r = mpz_probab_prime_p(q_.get_mpz_t(), 65);
  if (r == 0) throw err_bad_field("modulus is not prime: " + q_.get_str());
}

FieldCtxPtr make_field(const mpz_class& q) { return std::make_shared<FieldContext>(q); }

FieldCtxPtr make_field(unsigned long q) { return make_field(mpz_class(q)); }

FieldCtxPtr make_field(const std::string& q_decimal) {
  mpz_class q;
  if (q.set_str(q_decimal, 10) != 0) throw err_bad_field("cannot parse modulus: " + q_decimal);
  return make_field(q);
}

std::optional<mpz_class> sqrt_mod_q(const FqField& f, const mpz_class& a) {
  const mpz_class& q = f.q();
  if (f.is_zero(a)) return mpz_class(0);
  if (q == 2) return a;
  if (f.legendre(a) != 1) return std::nullopt;

  mpz_class r;
  if (mpz_tstbit(q.get_mpz_t(), 1)) {
    // q = 3 mod 4
    mpz_class e = (q + 1) / 4;
    r = f.pow(a, e);
  } else {
    // Tonelli-Shanks.
    mpz_class s = q - 1;
    unsigned long e2 = 0;
    while (mpz_even_p(s.get_mpz_t())) {
      s /= 2;
      ++e2;
    }
    // Find a non-residue.
    mpz_class z = 2;
    while (f.legendre(z) != -1) ++z;
    mpz_class c = f.pow(z, s);
    mpz_class x = f.pow(a, (s + 1) / 2);
    mpz_class t = f.pow(a, s);
    unsigned long m = e2;
    while (!f.is_one(t)) {
      mpz_class tt = t;
      unsigned long i = 0;
      while (!f.is_one(tt)) {
        tt = f.sqr(tt);
        ++i;
      }
      mpz_class b = c;
      for (unsigned long j = 0; j + i + 1 < m; ++j) b = f.sqr(b);
      x = f.mul(x, b);
      c = f.sqr(b);
      t = f.mul(t, c);
      m = i;
    }
    r = x;
  }
  mpz_class other = q - r;
  return (r <= other) ? r : other;
}

FieldElement field_inv(const FieldElement& a) {
  FqField f(a.context());
  return FieldElement(a.context(), f.inv(a.value()));
}

std::optional<FieldElement> sqrt_mod_q(const FieldElement& a) {
  FqField f(a.context());
  auto r = sqrt_mod_q(f, a.value());
  if (!r) return std::nullopt;
  return FieldElement(a.context(), *r);
}

}  // namespace g2rm
