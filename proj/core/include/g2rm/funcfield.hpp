#ifndef G2RM_FUNCFIELD_HPP
#define G2RM_FUNCFIELD_HPP

#include <memory>

#include "g2rm/poly.hpp"

namespace g2rm {

// Field of rational functions over F.  Elements are reduced fractions with
// monic denominator; gcd normalization runs after every operation.
template <class F>
class RationalFunctionField {
 public:
  struct Element {
    Poly<F> num;
    Poly<F> den;  // monic; den = 1 for polynomials and zero
  };

  RationalFunctionField() = default;
  explicit RationalFunctionField(const F& base) : base_(base) {}

  const F& base() const { return base_; }

  Element zero() const { return {Poly<F>{}, poly_one(base_)}; }
  Element one() const { return {poly_one(base_), poly_one(base_)}; }
  Element from_int(long v) const { return {poly_const(base_, base_.from_int(v)), poly_one(base_)}; }
  Element from_poly(Poly<F> p) const { return {std::move(p), poly_one(base_)}; }
  // The transcendental generator.
  Element gen() const { return {poly_xpow(base_, 1), poly_one(base_)}; }

  bool is_zero(const Element& x) const { return x.num.is_zero(); }
  bool is_one(const Element& x) const {
    return poly_is_one(base_, x.num) && poly_is_one(base_, x.den);
  }
  bool eq(const Element& x, const Element& y) const {
    return poly_eq(base_, x.num, y.num) && poly_eq(base_, x.den, y.den);
  }

  Element reduce(Poly<F> num, Poly<F> den) const {
    if (num.is_zero()) return zero();
    auto g = poly_gcd(base_, num, den);
    if (g.deg() > 0) {
      num = poly_exact_div(base_, num, g);
      den = poly_exact_div(base_, den, g);
    }
    if (!base_.is_one(poly_lc(den))) {
      auto inv = base_.inv(poly_lc(den));
      num = poly_scale(base_, num, inv);
      den = poly_scale(base_, den, inv);
    }
    return {std::move(num), std::move(den)};
  }

  Element add(const Element& x, const Element& y) const {
    auto num = poly_add(base_, poly_mul(base_, x.num, y.den), poly_mul(base_, y.num, x.den));
    return reduce(std::move(num), poly_mul(base_, x.den, y.den));
  }
  Element sub(const Element& x, const Element& y) const {
    auto num = poly_sub(base_, poly_mul(base_, x.num, y.den), poly_mul(base_, y.num, x.den));
    return reduce(std::move(num), poly_mul(base_, x.den, y.den));
  }
  Element neg(const Element& x) const { return {poly_neg(base_, x.num), x.den}; }
  Element mul(const Element& x, const Element& y) const {
    if (is_zero(x) || is_zero(y)) return zero();
    // Cross-cancel before multiplying to keep degrees down.
    auto g1 = poly_gcd(base_, x.num, y.den);
    auto g2 = poly_gcd(base_, y.num, x.den);
    auto n1 = g1.deg() > 0 ? poly_exact_div(base_, x.num, g1) : x.num;
    auto d2 = g1.deg() > 0 ? poly_exact_div(base_, y.den, g1) : y.den;
    auto n2 = g2.deg() > 0 ? poly_exact_div(base_, y.num, g2) : y.num;
    auto d1 = g2.deg() > 0 ? poly_exact_div(base_, x.den, g2) : x.den;
    return reduce(poly_mul(base_, n1, n2), poly_mul(base_, d1, d2));
  }
  Element inv(const Element& x) const {
    if (is_zero(x)) throw err_zero_inverse();
    Element r{x.den, x.num};
    auto lc = base_.inv(poly_lc(r.den));
    r.num = poly_scale(base_, r.num, lc);
    r.den = poly_scale(base_, r.den, lc);
    return r;
  }

 private:
  F base_;
};

// The function field of the curve: K(x_P)[y_P] / (y_P^2 - f(x_P)).
// Elements are A + B y_P; u-coordinates of the generic divisors stay in the
// even part and v-coordinates carry exactly one factor y_P, with y_P^2
// collapsing to f(x_P) on every product.
template <class F>
class CurveFunctionField {
 public:
  using RF = RationalFunctionField<F>;
  struct Element {
    typename RF::Element A;  // even part
    typename RF::Element B;  // coefficient of y_P
  };

  CurveFunctionField() = default;
  CurveFunctionField(const RF& rf, typename RF::Element f_at_xp)
      : rf_(rf), fx_(std::move(f_at_xp)) {}

  const RF& rf() const { return rf_; }
  const typename RF::Element& f_at_xp() const { return fx_; }

  Element zero() const { return {rf_.zero(), rf_.zero()}; }
  Element one() const { return {rf_.one(), rf_.zero()}; }
  Element from_int(long v) const { return {rf_.from_int(v), rf_.zero()}; }
  Element from_rf(typename RF::Element a) const { return {std::move(a), rf_.zero()}; }
  Element ygen() const { return {rf_.zero(), rf_.one()}; }

  bool is_zero(const Element& x) const { return rf_.is_zero(x.A) && rf_.is_zero(x.B); }
  bool is_one(const Element& x) const { return rf_.is_one(x.A) && rf_.is_zero(x.B); }
  bool eq(const Element& x, const Element& y) const {
    return rf_.eq(x.A, y.A) && rf_.eq(x.B, y.B);
  }

  Element add(const Element& x, const Element& y) const {
    return {rf_.add(x.A, y.A), rf_.add(x.B, y.B)};
  }
  Element sub(const Element& x, const Element& y) const {
    return {rf_.sub(x.A, y.A), rf_.sub(x.B, y.B)};
  }
  Element neg(const Element& x) const { return {rf_.neg(x.A), rf_.neg(x.B)}; }
  Element mul(const Element& x, const Element& y) const {
    // (A1 + B1 y)(A2 + B2 y) = A1A2 + B1B2 f + (A1B2 + B1A2) y
    auto a = rf_.add(rf_.mul(x.A, y.A), rf_.mul(rf_.mul(x.B, y.B), fx_));
    auto b = rf_.add(rf_.mul(x.A, y.B), rf_.mul(x.B, y.A));
    return {std::move(a), std::move(b)};
  }
  Element inv(const Element& x) const {
    // 1/(A + B y) = (A - B y) / (A^2 - B^2 f)
    auto d = rf_.sub(rf_.mul(x.A, x.A), rf_.mul(rf_.mul(x.B, x.B), fx_));
    if (rf_.is_zero(d)) throw err_zero_inverse();
    auto di = rf_.inv(d);
    return {rf_.mul(x.A, di), rf_.neg(rf_.mul(x.B, di))};
  }

 private:
  RF rf_;
  typename RF::Element fx_;
};

}  // namespace g2rm

#endif  // G2RM_FUNCFIELD_HPP
