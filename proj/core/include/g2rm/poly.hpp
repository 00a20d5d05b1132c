#ifndef G2RM_POLY_HPP
#define G2RM_POLY_HPP

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "g2rm/fq.hpp"

namespace g2rm {

// Degree of the zero polynomial.
inline constexpr int kZeroPolyDeg = -1;

// Schoolbook/Karatsuba switch-over (degree).  Fixed default per the library
// contract; see benchmarks/ for the measurement that keeps it here.
inline constexpr int kKaratsubaThreshold = 32;

// Dense univariate polynomial over a field-like coefficient domain F.
// Canonical form: no trailing zero coefficients; empty vector is the zero
// polynomial.  All operations are free functions taking the field handle.
template <class F>
struct Poly {
  std::vector<typename F::Element> c;

  Poly() = default;
  explicit Poly(std::vector<typename F::Element> cc) : c(std::move(cc)) {}

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

template <class F>
void poly_normalize(const F& K, Poly<F>& p) {
  while (!p.c.empty() && K.is_zero(p.c.back())) p.c.pop_back();
}

template <class F>
Poly<F> poly_zero(const F&) {
  return Poly<F>{};
}

template <class F>
Poly<F> poly_const(const F& K, typename F::Element v) {
  Poly<F> p;
  if (!K.is_zero(v)) p.c.push_back(std::move(v));
  return p;
}

template <class F>
Poly<F> poly_one(const F& K) {
  return poly_const(K, K.one());
}

// x^k
template <class F>
Poly<F> poly_xpow(const F& K, int k) {
  Poly<F> p;
  p.c.assign(k + 1, K.zero());
  p.c[k] = K.one();
  return p;
}

template <class F>
Poly<F> poly_from_ints(const F& K, std::initializer_list<long> cs) {
  Poly<F> p;
  for (long v : cs) p.c.push_back(K.from_int(v));
  poly_normalize(K, p);
  return p;
}

template <class F>
const typename F::Element& poly_lc(const Poly<F>& p) {
  assert(!p.is_zero());
  return p.c.back();
}

template <class F>
bool poly_eq(const F& K, const Poly<F>& a, const Poly<F>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!K.eq(a.c[i], b.c[i])) return false;
  return true;
}

template <class F>
bool poly_is_one(const F& K, const Poly<F>& p) {
  return p.c.size() == 1 && K.is_one(p.c[0]);
}

template <class F>
Poly<F> poly_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  const size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (i < a.c.size() && i < b.c.size())
      r.c.push_back(K.add(a.c[i], b.c[i]));
    else if (i < a.c.size())
      r.c.push_back(a.c[i]);
    else
      r.c.push_back(b.c[i]);
  }
  poly_normalize(K, r);
  return r;
}

template <class F>
Poly<F> poly_sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  const size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (i < a.c.size() && i < b.c.size())
      r.c.push_back(K.sub(a.c[i], b.c[i]));
    else if (i < a.c.size())
      r.c.push_back(a.c[i]);
    else
      r.c.push_back(K.neg(b.c[i]));
  }
  poly_normalize(K, r);
  return r;
}

template <class F>
Poly<F> poly_neg(const F& K, const Poly<F>& a) {
  Poly<F> r = a;
  for (auto& x : r.c) x = K.neg(x);
  return r;
}

template <class F>
Poly<F> poly_scale(const F& K, const Poly<F>& a, const typename F::Element& s) {
  if (K.is_zero(s)) return Poly<F>{};
  Poly<F> r = a;
  for (auto& x : r.c) x = K.mul(x, s);
  poly_normalize(K, r);
  return r;
}

// a * x^k
template <class F>
Poly<F> poly_shift(const F& K, const Poly<F>& a, int k) {
  if (a.is_zero()) return a;
  Poly<F> r;
  r.c.assign(a.c.size() + k, K.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
  return r;
}

namespace detail {

template <class F>
void school_mul(const F& K, const typename F::Element* a, size_t na,
                const typename F::Element* b, size_t nb, typename F::Element* r) {
  // r has na+nb-1 slots, zero-initialized.
  if constexpr (std::is_same_v<F, FqField>) {
    // Lazy accumulation: one reduction per output coefficient.
    for (size_t i = 0; i < na; ++i)
      for (size_t j = 0; j < nb; ++j) FqField::addmul_lazy(r[i + j], a[i], b[j]);
    for (size_t k = 0; k + 1 < na + nb; ++k) K.reduce(r[k]);
  } else {
    for (size_t i = 0; i < na; ++i)
      for (size_t j = 0; j < nb; ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
}

template <class F>
std::vector<typename F::Element> kara_mul(const F& K, const typename F::Element* a, size_t na,
                                          const typename F::Element* b, size_t nb) {
  std::vector<typename F::Element> r(na + nb - 1, K.zero());
  if (std::min(na, nb) <= static_cast<size_t>(kKaratsubaThreshold)) {
    school_mul(K, a, na, b, nb, r.data());
    return r;
  }
  const size_t m = (std::max(na, nb) + 1) / 2;
  if (na <= m || nb <= m) {
    // Unbalanced: split the longer operand.
    if (na > nb) {
      auto lo = kara_mul(K, a, m, b, nb);
      auto hi = kara_mul(K, a + m, na - m, b, nb);
      for (size_t i = 0; i < lo.size(); ++i) r[i] = K.add(r[i], lo[i]);
      for (size_t i = 0; i < hi.size(); ++i) r[i + m] = K.add(r[i + m], hi[i]);
    } else {
      auto lo = kara_mul(K, a, na, b, m);
      auto hi = kara_mul(K, a, na, b + m, nb - m);
      for (size_t i = 0; i < lo.size(); ++i) r[i] = K.add(r[i], lo[i]);
      for (size_t i = 0; i < hi.size(); ++i) r[i + m] = K.add(r[i + m], hi[i]);
    }
    return r;
  }
  // a = a0 + x^m a1, b = b0 + x^m b1
  const size_t na1 = na - m, nb1 = nb - m;
  auto z0 = kara_mul(K, a, m, b, m);
  auto z2 = kara_mul(K, a + m, na1, b + m, nb1);
  std::vector<typename F::Element> sa(std::max(m, na1), K.zero());
  std::vector<typename F::Element> sb(std::max(m, nb1), K.zero());
  for (size_t i = 0; i < m; ++i) sa[i] = a[i];
  for (size_t i = 0; i < na1; ++i) sa[i] = K.add(sa[i], a[m + i]);
  for (size_t i = 0; i < m; ++i) sb[i] = b[i];
  for (size_t i = 0; i < nb1; ++i) sb[i] = K.add(sb[i], b[m + i]);
  auto z1 = kara_mul(K, sa.data(), sa.size(), sb.data(), sb.size());
  for (size_t i = 0; i < z0.size(); ++i) z1[i] = K.sub(z1[i], z0[i]);
  for (size_t i = 0; i < z2.size(); ++i) z1[i] = K.sub(z1[i], z2[i]);
  for (size_t i = 0; i < z0.size(); ++i) r[i] = K.add(r[i], z0[i]);
  for (size_t i = 0; i < z1.size(); ++i)
    if (i + m < r.size()) r[i + m] = K.add(r[i + m], z1[i]);
  for (size_t i = 0; i < z2.size(); ++i) r[i + 2 * m] = K.add(r[i + 2 * m], z2[i]);
  return r;
}

}  // namespace detail

template <class F>
Poly<F> poly_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<F>{};
  Poly<F> r(detail::kara_mul(K, a.c.data(), a.c.size(), b.c.data(), b.c.size()));
  poly_normalize(K, r);
  return r;
}

template <class F>
Poly<F> poly_sqr(const F& K, const Poly<F>& a) {
  return poly_mul(K, a, a);
}

template <class F>
Poly<F> poly_make_monic(const F& K, const Poly<F>& a) {
  assert(!a.is_zero());
  if (K.is_one(poly_lc(a))) return a;
  return poly_scale(K, a, K.inv(poly_lc(a)));
}

// Division with remainder; b nonzero.  Works over any field-like F (the
// leading-coefficient inversion may throw for quotient algebras).
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const F& K, const Poly<F>& a, const Poly<F>& b) {
  assert(!b.is_zero());
  if (a.deg() < b.deg()) return {Poly<F>{}, a};
  const int db = b.deg();
  auto lcinv = K.inv(poly_lc(b));
  Poly<F> r = a;
  Poly<F> q;
  q.c.assign(a.deg() - db + 1, K.zero());
  for (int i = a.deg(); i >= db; --i) {
    if (K.is_zero(r.c[i])) continue;
    auto t = K.mul(r.c[i], lcinv);
    q.c[i - db] = t;
    // r -= t * x^{i-db} * b
    for (int j = 0; j <= db; ++j)
      r.c[i - db + j] = K.sub(r.c[i - db + j], K.mul(t, b.c[j]));
  }
  poly_normalize(K, q);
  poly_normalize(K, r);
  return {q, r};
}

template <class F>
Poly<F> poly_rem(const F& K, const Poly<F>& a, const Poly<F>& b) {
  return poly_divrem(K, a, b).second;
}

// Exact division (asserts zero remainder).
template <class F>
Poly<F> poly_exact_div(const F& K, const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = poly_divrem(K, a, b);
  assert(r.is_zero());
  return q;
}

template <class F>
Poly<F> poly_gcd(const F& K, Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = poly_rem(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return poly_make_monic(K, a);
}

// Extended gcd: g = s*a + t*b with g monic (or zero).
template <class F>
void poly_xgcd(const F& K, const Poly<F>& a, const Poly<F>& b, Poly<F>& g, Poly<F>& s,
               Poly<F>& t) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = poly_one(K), s1 = poly_zero(K);
  Poly<F> t0 = poly_zero(K), t1 = poly_one(K);
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divrem(K, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    Poly<F> s2 = poly_sub(K, s0, poly_mul(K, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = poly_sub(K, t0, poly_mul(K, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.is_zero() && !K.is_one(poly_lc(r0))) {
    auto inv = K.inv(poly_lc(r0));
    r0 = poly_scale(K, r0, inv);
    s0 = poly_scale(K, s0, inv);
    t0 = poly_scale(K, t0, inv);
  }
  g = std::move(r0);
  s = std::move(s0);
  t = std::move(t0);
}

template <class F>
typename F::Element poly_eval(const F& K, const Poly<F>& p, const typename F::Element& x) {
  auto r = K.zero();
  for (int i = p.deg(); i >= 0; --i) r = K.add(K.mul(r, x), p.c[i]);
  return r;
}

template <class F>
Poly<F> poly_derivative(const F& K, const Poly<F>& p) {
  Poly<F> r;
  for (int i = 1; i <= p.deg(); ++i) {
    auto k = K.from_int(i);
    r.c.push_back(K.mul(k, p.c[i]));
  }
  poly_normalize(K, r);
  return r;
}

template <class F>
Poly<F> poly_squarefree_part(const F& K, const Poly<F>& p) {
  if (p.deg() <= 0) return p;
  auto g = poly_gcd(K, p, poly_derivative(K, p));
  if (g.deg() <= 0) return poly_make_monic(K, p);
  return poly_make_monic(K, poly_exact_div(K, p, g));
}

// Newton interpolation through distinct points xs.
template <class F>
Poly<F> poly_interpolate(const F& K, const std::vector<typename F::Element>& xs,
                         const std::vector<typename F::Element>& ys) {
  assert(xs.size() == ys.size());
  const size_t n = xs.size();
  // Divided differences.
  std::vector<typename F::Element> dd = ys;
  for (size_t j = 1; j < n; ++j) {
    for (size_t i = n - 1; i >= j; --i) {
      auto num = K.sub(dd[i], dd[i - 1]);
      auto den = K.sub(xs[i], xs[i - j]);
      dd[i] = K.mul(num, K.inv(den));
      if (i == j) break;
    }
  }
  // Horner assembly of the Newton form.
  Poly<F> r = poly_const(K, dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    // r = r*(x - xs[i]) + dd[i]
    Poly<F> xm;
    xm.c = {K.neg(xs[i]), K.one()};
    r = poly_mul(K, r, xm);
    r = poly_add(K, r, poly_const(K, dd[i]));
  }
  return r;
}

// Truncated power-series inverse of f (f(0) invertible) to precision n.
template <class F>
Poly<F> poly_inv_series(const F& K, const Poly<F>& f, int n) {
  assert(!f.is_zero() && !K.is_zero(f.c[0]));
  Poly<F> g = poly_const(K, K.inv(f.c[0]));
  int prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    // g = g*(2 - f*g) mod x^prec
    Poly<F> fg = poly_mul(K, f, g);
    if (fg.deg() >= prec) fg.c.resize(prec), poly_normalize(K, fg);
    Poly<F> two_minus = poly_sub(K, poly_from_ints(K, {2}), fg);
    g = poly_mul(K, g, two_minus);
    if (g.deg() >= prec) g.c.resize(prec), poly_normalize(K, g);
  }
  return g;
}

template <class F>
Poly<F> poly_reverse(const F& K, const Poly<F>& p, int len) {
  // Coefficients of x^{len-1} p(1/x); len >= deg(p)+1.
  Poly<F> r;
  r.c.assign(len, K.zero());
  for (int i = 0; i <= p.deg(); ++i) r.c[len - 1 - i] = p.c[i];
  poly_normalize(K, r);
  return r;
}

// Repeated remainders by a fixed monic modulus: precomputes the Newton
// inverse of the reversed modulus so each reduction is two multiplications.
template <class F>
struct PreparedModulus {
  Poly<F> m;
  Poly<F> rev_inv;  // inverse series of rev(m), precision cap
  int cap = 0;      // max supported deg(a) - deg(m) + 1

  PreparedModulus() = default;
  PreparedModulus(const F& K, Poly<F> mod, int max_input_deg) : m(std::move(mod)) {
    assert(K.is_one(poly_lc(m)));
    cap = std::max(1, max_input_deg - m.deg() + 1);
    auto mr = poly_reverse(K, m, m.deg() + 1);
    rev_inv = poly_inv_series(K, mr, cap);
  }

  Poly<F> rem(const F& K, const Poly<F>& a) const {
    if (a.deg() < m.deg()) return a;
    const int k = a.deg() - m.deg() + 1;
    if (k > cap) return poly_rem(K, a, m);
    Poly<F> ar = poly_reverse(K, a, a.deg() + 1);
    Poly<F> qr = poly_mul(K, ar, rev_inv);
    if (qr.deg() >= k) qr.c.resize(k), poly_normalize(K, qr);
    Poly<F> q = poly_reverse(K, qr, k);
    Poly<F> qm = poly_mul(K, q, m);
    Poly<F> r = poly_sub(K, a, qm);
    assert(r.deg() < m.deg());
    return r;
  }
};

// a^e mod m (e arbitrary-precision nonnegative).
template <class F>
Poly<F> poly_powmod(const F& K, const Poly<F>& a, const mpz_class& e, const Poly<F>& m) {
  PreparedModulus<F> pm(K, poly_make_monic(K, m), 2 * m.deg());
  Poly<F> base = pm.rem(K, a);
  Poly<F> r = poly_one(K);
  const size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return poly_rem(K, r, m);
  for (size_t i = nbits; i-- > 0;) {
    r = pm.rem(K, poly_sqr(K, r));
    if (mpz_tstbit(e.get_mpz_t(), i)) r = pm.rem(K, poly_mul(K, r, base));
  }
  return r;
}

// Square-and-multiply power for any field-like coefficient domain.
template <class F>
typename F::Element field_pow_ui(const F& K, const typename F::Element& a, unsigned long e) {
  auto r = K.one();
  auto base = a;
  while (e > 0) {
    if (e & 1ul) r = K.mul(r, base);
    e >>= 1;
    if (e) base = K.mul(base, base);
  }
  return r;
}

// Resultant of two univariate polynomials via the Euclidean sequence.
template <class F>
typename F::Element poly_resultant(const F& K, Poly<F> a, Poly<F> b) {
  if (a.is_zero() || b.is_zero()) {
    // Res is 1 when the other is a nonzero constant, else 0.
    if (a.is_zero() && b.deg() == 0) return K.one();
    if (b.is_zero() && a.deg() == 0) return K.one();
    return K.zero();
  }
  auto res = K.one();
  bool negate = false;
  while (true) {
    if (b.deg() == 0) {
      // Res(a, c) = c^{deg a}
      res = K.mul(res, field_pow_ui(K, b.c[0], static_cast<unsigned long>(a.deg())));
      break;
    }
    if (a.deg() < b.deg()) {
      if ((a.deg() % 2) && (b.deg() % 2)) negate = !negate;
      std::swap(a, b);
    }
    auto r = poly_rem(K, a, b);
    if (r.is_zero()) return K.zero();
    // Res(a,b) = lc(b)^{deg a - deg r} * (-1)^{deg a * deg b} * Res(b, r)
    res = K.mul(res, field_pow_ui(K, poly_lc(b), static_cast<unsigned long>(a.deg() - r.deg())));
    if ((a.deg() % 2) && (b.deg() % 2)) negate = !negate;
    a = std::move(b);
    b = std::move(r);
  }
  return negate ? K.neg(res) : res;
}

template <class F>
Poly<F> poly_random(const F& K, ChaChaRng& rng, int degree) {
  Poly<F> p;
  if (degree < 0) return p;
  p.c.reserve(degree + 1);
  for (int i = 0; i <= degree; ++i) p.c.push_back(K.random(rng));
  while (K.is_zero(p.c.back())) p.c.back() = K.random(rng);
  return p;
}

}  // namespace g2rm

#endif  // G2RM_POLY_HPP
