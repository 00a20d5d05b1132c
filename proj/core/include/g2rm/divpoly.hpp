#ifndef G2RM_DIVPOLY_HPP
#define G2RM_DIVPOLY_HPP

#include "g2rm/families.hpp"
#include "g2rm/rmorder.hpp"

namespace g2rm {

// Division polynomials of [a] + [b]*phi, computed by double-and-add on the
// generic embedded point over the function field of the curve; one generic
// sum combines the integer part with the phi image.  Degrees are O(|N(alpha)|).
DivisionPolys alpha_division_polys(const RMFamilyInstance& inst, const RMOrderElement& alpha);

// Division polynomials of the integer multiple [k] (k >= 2).
DivisionPolys k_division_polys(const CurveModel& c, long k);

struct DivpolyDegrees {
  int d0, d1, d2, e0, e1, e2;
};
DivpolyDegrees divpoly_degrees(const DivisionPolys& dp);

}  // namespace g2rm

#endif  // G2RM_DIVPOLY_HPP
