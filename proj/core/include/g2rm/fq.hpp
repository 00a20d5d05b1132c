#ifndef G2RM_FQ_HPP
#define G2RM_FQ_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>

#include "g2rm/errors.hpp"
#include "g2rm/rng.hpp"

namespace g2rm {

// Ambient prime field F_q.  The modulus is validated once at construction by
// Miller-Rabin with error probability below 2^-128.  A context is immutable
// and safe to share across threads.
class FieldContext {
 public:
  explicit FieldContext(mpz_class q);

  const mpz_class& modulus() const noexcept { return q_; }
  size_t bits() const noexcept { return mpz_sizeinbase(q_.get_mpz_t(), 2); }

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

 private:
  mpz_class q_;
};

using FieldCtxPtr = std::shared_ptr<const FieldContext>;

FieldCtxPtr make_field(const mpz_class& q);
FieldCtxPtr make_field(unsigned long q);
FieldCtxPtr make_field(const std::string& q_decimal);

// Arithmetic engine for F_q on bare mpz values, canonical range [0, q).
// This is the hot-path interface: the polynomial and quotient-algebra layers
// route every coefficient operation through it.
struct FqField {
  using Element = mpz_class;

  const FieldContext* ctx = nullptr;

  FqField() = default;
  explicit FqField(const FieldContext* c) : ctx(c) {}
  explicit FqField(const FieldCtxPtr& c) : ctx(c.get()) {}

  const mpz_class& q() const { return ctx->modulus(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }

  Element from_int(long v) const {
    Element r(v);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), q().get_mpz_t());
    return r;
  }
  Element from_mpz(const mpz_class& v) const {
    Element r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), q().get_mpz_t());
    return r;
  }

  bool is_zero(const Element& a) const { return mpz_sgn(a.get_mpz_t()) == 0; }
  bool is_one(const Element& a) const { return mpz_cmp_ui(a.get_mpz_t(), 1) == 0; }
  bool eq(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const {
    Element r = a + b;
    if (r >= q()) r -= q();
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r = a - b;
    if (mpz_sgn(r.get_mpz_t()) < 0) r += q();
    return r;
  }
  Element neg(const Element& a) const {
    if (is_zero(a)) return a;
    return q() - a;
  }
  Element mul(const Element& a, const Element& b) const {
    Element r;
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), q().get_mpz_t());
    return r;
  }
  Element sqr(const Element& a) const { return mul(a, a); }

  void add_assign(Element& a, const Element& b) const {
    a += b;
    if (a >= q()) a -= q();
  }
  void sub_assign(Element& a, const Element& b) const {
    a -= b;
    if (mpz_sgn(a.get_mpz_t()) < 0) a += q();
  }
  // out = a*b mod q, reusing out's limb allocation.
  void mul_into(Element& out, const Element& a, const Element& b) const {
    mpz_mul(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), q().get_mpz_t());
  }
  // acc += a*b without reduction; caller reduces once per coefficient.
  static void addmul_lazy(Element& acc, const Element& a, const Element& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void reduce(Element& a) const { mpz_mod(a.get_mpz_t(), a.get_mpz_t(), q().get_mpz_t()); }

  Element inv(const Element& a) const {
    if (is_zero(a)) throw err_zero_inverse();
    Element r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q().get_mpz_t()) == 0)
      throw err_zero_inverse();
    return r;
  }

  Element pow(const Element& a, const mpz_class& e) const {
    Element r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), q().get_mpz_t());
    return r;
  }
  Element pow_ui(const Element& a, unsigned long e) const {
    Element r;
    mpz_powm_ui(r.get_mpz_t(), a.get_mpz_t(), e, q().get_mpz_t());
    return r;
  }

  // Legendre symbol; q odd prime.
  int legendre(const Element& a) const { return mpz_legendre(a.get_mpz_t(), q().get_mpz_t()); }

  Element random(ChaChaRng& rng) const {
    size_t limbs = (bitsize() + 63) / 64 + 1;
    Element r = 0;
    for (size_t i = 0; i < limbs; ++i) {
      r <<= 64;
      r += mpz_class(static_cast<unsigned long>(rng.next_u64()));
    }
    reduce(r);
    return r;
  }

  size_t bitsize() const { return ctx->bits(); }

  bool same(const FqField& o) const { return ctx == o.ctx; }
};

// Square root in F_q (q odd prime) via Tonelli-Shanks.  Returns the smaller
// of the two roots by integer value, or nullopt for a non-residue.
std::optional<mpz_class> sqrt_mod_q(const FqField& f, const mpz_class& a);

// User-facing field element: value plus context handle.  Mixing contexts is
// a checked failure.  Thin sugar over FqField; inner loops use the engine.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldCtxPtr ctx, const mpz_class& v) : ctx_(std::move(ctx)) {
    value_ = FqField(ctx_).from_mpz(v);
  }
  FieldElement(FieldCtxPtr ctx, long v) : ctx_(std::move(ctx)) {
    value_ = FqField(ctx_).from_int(v);
  }

  const mpz_class& value() const { return value_; }
  const FieldCtxPtr& context() const { return ctx_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return FieldElement(a.ctx_, FqField(a.ctx_).add(a.value_, b.value_), 0);
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return FieldElement(a.ctx_, FqField(a.ctx_).sub(a.value_, b.value_), 0);
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return FieldElement(a.ctx_, FqField(a.ctx_).mul(a.value_, b.value_), 0);
  }
  FieldElement operator-() const { return FieldElement(ctx_, FqField(ctx_).neg(value_), 0); }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return a.value_ == b.value_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  bool is_zero() const { return mpz_sgn(value_.get_mpz_t()) == 0; }

 private:
  FieldElement(FieldCtxPtr ctx, mpz_class v, int) : ctx_(std::move(ctx)), value_(std::move(v)) {}
  void check(const FieldElement& o) const {
    if (ctx_.get() != o.ctx_.get()) throw err_mixed_context();
  }

  FieldCtxPtr ctx_;
  mpz_class value_;
};

// a^{-1} in F_q; errors with ZeroInverse for a = 0.
FieldElement field_inv(const FieldElement& a);

// Smaller square root of a if it is a quadratic residue.
std::optional<FieldElement> sqrt_mod_q(const FieldElement& a);

}  // namespace g2rm

#endif  // G2RM_FQ_HPP
