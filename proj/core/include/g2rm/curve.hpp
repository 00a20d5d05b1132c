#ifndef G2RM_CURVE_HPP
#define G2RM_CURVE_HPP

#include <string>
#include <vector>

#include "g2rm/mumford.hpp"

namespace g2rm {

enum class FamilyTag { explicit_f, tautz, humbert5, mestre8 };

std::string family_name(FamilyTag t);

// Concrete genus-2 curve y^2 = f(x) over F_q, deg f in {5, 6}, f squarefree.
struct CurveModel {
  FieldCtxPtr ctx;
  Poly<FqField> f;
  FamilyTag family = FamilyTag::explicit_f;
  // Family parameters (reduced mod q); tautz uses t only.
  mpz_class param_s;
  mpz_class param_t;

  FqField field() const { return FqField(ctx); }
  bool even_model() const { return f.deg() == 6; }
};

// Checks q odd prime (the context already guarantees primality), the degree
// window and squarefreeness of f.  Errors: BadField, BadDegree,
// SingularCurve.
void validate_curve(const CurveModel& c);

// Curve arithmetic context: curve polynomial data plus the infinity branch
// bookkeeping for even models.
CurvePoly<FqField> curve_ops(const CurveModel& c);

using Divisor = MumfordDiv<FqField>;

// Canonical byte string; usable as a hash key.
std::string divisor_key(const FqField& K, const Divisor& D);

}  // namespace g2rm

#endif  // G2RM_CURVE_HPP
