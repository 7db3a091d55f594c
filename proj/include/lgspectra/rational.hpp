#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lgspectra/errors.hpp"

namespace lgs {

// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose
  Rational(long n, long d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    return Rational(mpq_class(1) / q_);
  }

  // Largest integer <= value.
  mpz_class floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return f;
  }

  // Fractional part in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return reciprocal().pow(-e);
    Rational base = *this, acc = 1;
    long k = e;
    while (k > 0) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

  double to_double() const { return q_.get_d(); }

  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  mpq_class q_;
};

inline mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// x (x+1) ... (x+n-1)
inline Rational rising_factorial(const Rational& x, long n) {
  Rational acc = 1;
  for (long k = 0; k < n; ++k) acc *= x + Rational(k);
  return acc;
}

}  // namespace lgs
