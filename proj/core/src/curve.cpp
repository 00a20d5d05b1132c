#include "g2rm/curve.hpp"

#include "g2rm/errors.hpp"

namespace g2rm {

std::string family_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::tautz: return "tautz";
    case FamilyTag::humbert5: return "humbert5";
    case FamilyTag::mestre8: return "mestre8";
    default: return "explicit";
  }
}

void validate_curve(const CurveModel& c) {
  const FqField K = c.field();
  if (K.q() == 2 || mpz_even_p(K.q().get_mpz_t()))
    throw err_bad_field("base field must have odd characteristic");
  const int d = c.f.deg();
  if (d != 5 && d != 6) throw err_bad_degree("deg f = " + std::to_string(d) + ", want 5 or 6");
  // Squarefree <=> gcd(f, f') constant (char q > 5 territory is implied by
  // the families; the direct gcd test is what matters).
  auto g = poly_gcd(K, c.f, poly_derivative(K, c.f));
  if (g.deg() != 0) throw err_singular_curve("disc(f) = 0");
}

CurvePoly<FqField> curve_ops(const CurveModel& c) {
  const FqField K = c.field();
  std::optional<mpz_class> rho;
  if (c.f.deg() == 6) rho = sqrt_mod_q(K, poly_lc(c.f));
  return make_curve_poly(K, c.f, rho);
}

std::string divisor_key(const FqField& K, const Divisor& D) {
  std::string s = std::to_string(D.inf);
  s += '|';
  for (const auto& x : D.u.c) {
    s += x.get_str(16);
    s += ',';
  }
  s += '|';
  for (const auto& x : D.v.c) {
    s += x.get_str(16);
    s += ',';
  }
  return s;
}

}  // namespace g2rm
