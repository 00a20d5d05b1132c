#ifndef G2RM_QUOTIENT_FIELD_HPP
#define G2RM_QUOTIENT_FIELD_HPP

#include <memory>

#include "g2rm/poly.hpp"

namespace g2rm {

// F[x]/(m) with m irreducible over F: a field extension usable as the
// coefficient domain of the generic polynomial and divisor layers.  Used for
// quadratic extensions (divisor arithmetic on irreducible u, interpolation
// fallbacks when F_q runs out of evaluation points).
template <class F>
class QuotientField {
 public:
  using Element = Poly<F>;

  QuotientField() = default;
  QuotientField(const F& base, Poly<F> modulus)
      : base_(base), state_(std::make_shared<State>()) {
    state_->m = poly_make_monic(base, std::move(modulus));
    state_->pm = PreparedModulus<F>(base, state_->m, 2 * state_->m.deg());
  }

  const F& base() const { return base_; }
  const Poly<F>& modulus() const { return state_->m; }
  int ext_degree() const { return state_->m.deg(); }

  Element zero() const { return Element{}; }
  Element one() const { return poly_one(base_); }
  Element from_int(long v) const { return poly_const(base_, base_.from_int(v)); }
  Element from_base(const typename F::Element& v) const { return poly_const(base_, v); }
  // The residue class of x.
  Element gen() const { return poly_xpow(base_, 1); }

  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool is_one(const Element& a) const { return poly_is_one(base_, a); }
  bool eq(const Element& a, const Element& b) const { return poly_eq(base_, a, b); }

  Element add(const Element& a, const Element& b) const { return poly_add(base_, a, b); }
  Element sub(const Element& a, const Element& b) const { return poly_sub(base_, a, b); }
  Element neg(const Element& a) const { return poly_neg(base_, a); }
  Element mul(const Element& a, const Element& b) const {
    return state_->pm.rem(base_, poly_mul(base_, a, b));
  }
  Element inv(const Element& a) const {
    if (a.is_zero()) throw err_zero_inverse();
    Poly<F> g, s, t;
    poly_xgcd(base_, a, state_->m, g, s, t);
    if (g.deg() != 0) throw err_zero_inverse();
    return state_->pm.rem(base_, s);
  }

  Element random(ChaChaRng& rng) const {
    Element r;
    for (int i = 0; i < ext_degree(); ++i) r.c.push_back(base_.random(rng));
    poly_normalize(base_, r);
    return r;
  }

 private:
  struct State {
    Poly<F> m;
    PreparedModulus<F> pm;
  };
  F base_;
  std::shared_ptr<State> state_;
};

using QuadExt = QuotientField<FqField>;

// F_{q^2} as F_q[t]/(t^2 - ns) for the smallest non-residue ns.
inline QuadExt make_quadratic_extension(const FqField& K) {
  mpz_class ns = 2;
  while (K.legendre(ns) != -1) ++ns;
  Poly<FqField> m;
  m.c = {K.neg(ns), K.zero(), K.one()};
  return QuadExt(K, std::move(m));
}

}  // namespace g2rm

#endif  // G2RM_QUOTIENT_FIELD_HPP
