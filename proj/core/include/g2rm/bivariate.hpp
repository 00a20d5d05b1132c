#ifndef G2RM_BIVARIATE_HPP
#define G2RM_BIVARIATE_HPP

#include <vector>

#include "g2rm/poly.hpp"
#include "g2rm/quotient_field.hpp"

namespace g2rm {

// Dense bivariate polynomial over F_q.  c[j] is the coefficient of x2^j,
// itself a polynomial in x1.  The same container doubles as a polynomial in
// (s, p): then c[j] is the coefficient of p^j as a polynomial in s.
struct Bivar {
  std::vector<Poly<FqField>> c;

  int deg2() const { return static_cast<int>(c.size()) - 1; }
  int deg1() const {
    int d = kZeroPolyDeg;
    for (const auto& p : c) d = std::max(d, p.deg());
    return d;
  }
  bool is_zero() const {
    for (const auto& p : c)
      if (!p.is_zero()) return false;
    return true;
  }
};

void bivar_normalize(const FqField& K, Bivar& a);

// a(x1) * b(x2)
Bivar bivar_outer(const FqField& K, const Poly<FqField>& a, const Poly<FqField>& b);

Bivar bivar_add(const FqField& K, const Bivar& a, const Bivar& b);
Bivar bivar_sub(const FqField& K, const Bivar& a, const Bivar& b);

// Swap the roles of x1 and x2.
Bivar bivar_transpose(const FqField& K, const Bivar& a);

// Evaluate x1 := t, leaving a univariate polynomial in x2.
Poly<FqField> bivar_eval_x1(const FqField& K, const Bivar& a, const mpz_class& t);

mpz_class bivar_eval(const FqField& K, const Bivar& a, const mpz_class& x1, const mpz_class& x2);

// Exact quotient a / (x1 - x2); requires a(x,x) = 0 (antisymmetric input).
Bivar bivar_div_x1_minus_x2(const FqField& K, const Bivar& a);

// Rewrite a symmetric polynomial in (x1, x2) in terms of s = x1+x2 and
// p = x1*x2.  The input grid must satisfy a[i][j] = a[j][i].
Bivar bivar_symmetric_reduce(const FqField& K, const Bivar& a);

// In-place substitution s -> -s (used to pass from s to a1 = -(x1+x2)).
void bivar_negate_var1(const FqField& K, Bivar& a);

// Divide out the content gcd_j c[j] (a polynomial in x1); returns the content.
Poly<FqField> bivar_remove_content(const FqField& K, Bivar& a);

enum class ElimVar { x1, x2 };

// Res_{x2}(a, b) as a polynomial in x1 (or with roles swapped for
// ElimVar::x1), computed by evaluation at x1 = 0, 1, 2, ... and
// interpolation.  Points where either leading coefficient vanishes are
// skipped; after 2x extra attempts the computation fails with
// DegenerateLeading.  InsufficientPoints when q cannot supply enough
// evaluation points for the degree bound.
Poly<FqField> resultant_by_interpolation(const FqField& K, const Bivar& a, const Bivar& b,
                                         ElimVar eliminate = ElimVar::x2);

// Same computation with evaluation points drawn from F_{q^2}; lifts the
// per-point work into the quadratic extension so small base fields can still
// supply enough points.  The result has coefficients in F_q.
Poly<FqField> resultant_by_interpolation_ext(const FqField& K, const Bivar& a, const Bivar& b);

}  // namespace g2rm

#endif  // G2RM_BIVARIATE_HPP
