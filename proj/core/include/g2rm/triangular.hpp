#ifndef G2RM_TRIANGULAR_HPP
#define G2RM_TRIANGULAR_HPP

#include <deque>
#include <vector>

#include "g2rm/poly.hpp"

namespace g2rm {

// Dense recursive multivariate polynomial over F_q in variables x_0..x_level.
// level 0 stores univariate coefficients directly; higher levels store the
// coefficients with respect to their main variable.  Canonical form has no
// trailing zero entries at any level.
struct TPoly {
  int level = 0;
  std::vector<mpz_class> coef;  // level == 0
  std::vector<TPoly> kids;      // level > 0

  bool is_zero() const { return level == 0 ? coef.empty() : kids.empty(); }
  int deg() const {
    return level == 0 ? static_cast<int>(coef.size()) - 1 : static_cast<int>(kids.size()) - 1;
  }
};

TPoly tp_zero(int level);
TPoly tp_const(const FqField& K, int level, const mpz_class& v);
TPoly tp_one(const FqField& K, int level);
// The variable x_var as an element at the given level (var <= level).
TPoly tp_var(const FqField& K, int level, int var);
// Embed a polynomial in x_0 at the given level.
TPoly tp_from_poly(const FqField& K, int level, const Poly<FqField>& p);
// Raise to a higher level (wrap as degree-0 chains).
TPoly tp_embed(const TPoly& t, int level);

void tp_normalize(TPoly& t);
bool tp_eq(const TPoly& a, const TPoly& b);
TPoly tp_add(const FqField& K, const TPoly& a, const TPoly& b);
TPoly tp_sub(const FqField& K, const TPoly& a, const TPoly& b);
TPoly tp_neg(const FqField& K, const TPoly& a);
TPoly tp_mul(const FqField& K, const TPoly& a, const TPoly& b);
TPoly tp_scale(const FqField& K, const TPoly& a, const mpz_class& c);
// Evaluate at a full point (one value per variable).
mpz_class tp_eval(const FqField& K, const TPoly& t, const std::vector<mpz_class>& pt);

// Internal control-flow signal: a zero divisor was hit while inverting; the
// ideal factors at `level` through the monic `factor`.  Not an Error: the
// component driver catches it, splits, and replays.
struct IdealSplit {
  int level;
  TPoly factor;
};

// Triangular ideal (T_0(x_0), ..., T_{k-1}(x_0..x_{k-1})), each generator
// monic in its main variable with reduced lower coefficients.
class TriangularIdeal {
 public:
  TriangularIdeal() = default;
  TriangularIdeal(const FqField& K, std::vector<TPoly> gens);

  int nvars() const { return static_cast<int>(gens_.size()); }
  const TPoly& gen(int i) const { return gens_[i]; }
  int main_deg(int i) const { return gens_[i].deg(); }
  unsigned long quotient_degree() const;
  const PreparedModulus<FqField>& level0() const { return pm0_; }

 private:
  std::vector<TPoly> gens_;
  PreparedModulus<FqField> pm0_;
};

// Canonical normal form modulo the ideal.
TPoly tq_reduce(const FqField& K, const TriangularIdeal& I, const TPoly& t);

// Inverse of a reduced element; throws IdealSplit on zero divisors and
// ZeroInverse on the zero residue.
TPoly tq_inv(const FqField& K, const TriangularIdeal& I, const TPoly& a);

// Spec-facing wrapper: inverse, or the nontrivial factorization data.
struct InvertOutcome {
  bool invertible = false;
  TPoly inverse;
  int split_level = -1;
  TPoly split_factor;
};
InvertOutcome invert_or_split(const FqField& K, const TriangularIdeal& I, const TPoly& a);

// Factor the ideal at `level` through the monic factor; returns the two
// components (factor side first).
std::pair<TriangularIdeal, TriangularIdeal> split_ideal(const FqField& K,
                                                        const TriangularIdeal& I, int level,
                                                        const TPoly& factor);

// Coefficient domain handle over the quotient algebra, for the templated
// polynomial/divisor layers.  Inversions may throw IdealSplit.
struct QuotField {
  using Element = TPoly;

  const FieldContext* fctx = nullptr;
  const TriangularIdeal* I = nullptr;

  QuotField() = default;
  QuotField(const FqField& K, const TriangularIdeal& ideal) : fctx(K.ctx), I(&ideal) {}

  FqField base() const { return FqField(fctx); }
  int top() const { return I->nvars() - 1; }

  Element zero() const { return tp_zero(top()); }
  Element one() const { return tp_const(base(), top(), 1); }
  Element from_int(long v) const { return tp_const(base(), top(), base().from_int(v)); }

  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool is_one(const Element& a) const { return tp_eq(a, one()); }
  bool eq(const Element& a, const Element& b) const { return tp_eq(a, b); }

  Element add(const Element& a, const Element& b) const { return tp_add(base(), a, b); }
  Element sub(const Element& a, const Element& b) const { return tp_sub(base(), a, b); }
  Element neg(const Element& a) const { return tp_neg(base(), a); }
  Element mul(const Element& a, const Element& b) const {
    return tq_reduce(base(), *I, tp_mul(base(), a, b));
  }
  Element inv(const Element& a) const { return tq_inv(base(), *I, a); }

  // a^e by square-and-multiply in the quotient.
  Element pow(const Element& a, const mpz_class& e) const;
};

// Work-list driver: runs fn on every component the splits produce.
// fn: void(const TriangularIdeal&).
template <class Fn>
void for_each_component(const FqField& K, std::vector<TriangularIdeal> stack, Fn fn) {
  std::deque<TriangularIdeal> work(std::make_move_iterator(stack.begin()),
                                   std::make_move_iterator(stack.end()));
  while (!work.empty()) {
    TriangularIdeal I = std::move(work.front());
    work.pop_front();
    try {
      fn(I);
    } catch (const IdealSplit& s) {
      auto [a, b] = split_ideal(K, I, s.level, s.factor);
      work.push_back(std::move(a));
      work.push_back(std::move(b));
    }
  }
}

}  // namespace g2rm

#endif  // G2RM_TRIANGULAR_HPP
