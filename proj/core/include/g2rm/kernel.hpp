#ifndef G2RM_KERNEL_HPP
#define G2RM_KERNEL_HPP

#include "g2rm/divpoly.hpp"
#include "g2rm/triangular.hpp"

namespace g2rm {

// Triangular description of the nonzero generic-shape part of Jac[alpha],
// in the Mumford coordinates (a1, a0, b1, b0) = variables (x0, x1, x2, x3).
// Components arise from zero-divisor splits during triangularization;
// parasite components (from omitted parasite pruning) are tolerated and die
// in the per-prime consistency vote.
struct KernelIdeal {
  std::vector<TriangularIdeal> components;
  unsigned long total_degree = 0;
};

KernelIdeal build_kernel_ideal(const RMFamilyInstance& inst, const DivisionPolys& dp);

// The generic divisor (x^2 + a1 x + a0, b1 x + b0) over a component.
MumfordDiv<QuotField> generic_divisor(const QuotField& Q);

// Coordinate-wise q-power map.
MumfordDiv<QuotField> generic_frobenius(const QuotField& Q, const MumfordDiv<QuotField>& D,
                                        const mpz_class& q);

// Curve data lifted into the quotient algebra.
CurvePoly<QuotField> curve_over_quotient(const QuotField& Q, const CurveModel& c);

}  // namespace g2rm

#endif  // G2RM_KERNEL_HPP
