#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>

#include "lgspectra/errors.hpp"
#include "lgspectra/rational.hpp"

namespace lgs {

constexpr long kMinPrec = 32;

// Arbitrary-precision binary float. Results of binary operations carry the
// minimum precision of the operands; callers plan guard bits per pipeline.
class Real {
 public:
  explicit Real(long prec = 64) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
  Real(long x, long prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(const Rational& q, long prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
  }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, kMinPrec); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  long prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static Real pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) { return binop(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return binop(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return binop(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return binop(mpfr_div, a, b); }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }

  Real abs() const { Real r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
  Real sqrt() const { Real r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
  Real exp() const { Real r(prec()); mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
  Real log() const { Real r(prec()); mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
  Real sin() const { Real r(prec()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
  Real cos() const { Real r(prec()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
  Real pow(const Real& e) const {
    Real r(std::min(prec(), e.prec()));
    mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
    return r;
  }
  // value * 2^k, exact
  Real ldexp(long k) const {
    Real r(prec());
    mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // binary exponent e with 2^{e-1} <= |value| < 2^e; value must be nonzero
  long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

  std::string to_string(long digits = 0) const {
    if (digits <= 0) digits = static_cast<long>(prec() * 0.30103) + 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  static long clamp(long prec) { return std::max(prec, kMinPrec); }
  using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real binop(BinFn fn, const Real& a, const Real& b) {
    Real r(std::min(a.prec(), b.prec()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

// 2^e as a Real, handy for tolerances.
inline Real pow2(long e, long prec = 64) { return Real(1L, prec).ldexp(e); }

// Gamma at a positive rational, relative error well within 2^{-prec+8}.
inline Real gamma_eval(const Rational& r, long prec) {
  if (r.sign() <= 0) throw NonPositiveArgument("gamma_eval requires a positive argument");
  Real x(r, prec + 16);
  Real out(prec);
  mpfr_gamma(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

struct Complex {
  Real re, im;

  explicit Complex(long prec = 64) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long x, long prec) : re(x, prec), im(prec) {}
  Complex(const Rational& q, long prec) : re(q, prec), im(prec) {}

  long prec() const { return std::min(re.prec(), im.prec()); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) throw DivisionByZero("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }

  Real abs() const {
    Real r(std::min(re.prec(), im.prec()));
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// exp(i*theta)
inline Complex exp_i(const Real& theta) {
  Real c(theta.prec()), s(theta.prec());
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return {c, s};
}

// exp(2*pi*i*t) with the rational turn count t reduced exactly mod 1.
// Quarter turns come out exact.
inline Complex exp_2pi_i(const Rational& turns, long prec) {
  Rational t = turns.frac();
  if (t == Rational(0)) return Complex(1, prec);
  if (t == Rational(1, 2)) return Complex(-1, prec);
  if (t == Rational(1, 4)) return {Real(0L, prec), Real(1L, prec)};
  if (t == Rational(3, 4)) return {Real(0L, prec), Real(-1L, prec)};
  Real theta = Real(t, prec) * Real(2, prec) * Real::pi(prec);
  return exp_i(theta);
}

}  // namespace lgs
