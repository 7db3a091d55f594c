#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <vector>

#include "lgspectra/errors.hpp"
#include "lgspectra/poly.hpp"
#include "lgspectra/rational.hpp"
#include "lgspectra/real.hpp"

namespace lgs {

// Coefficients of the d-th cyclotomic polynomial Phi_d, computed by exact
// division of x^d - 1 by the Phi_e of the proper divisors e of d.
inline std::vector<mpz_class> cyclotomic_polynomial(long d) {
  static std::map<long, std::vector<mpz_class>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  Poly num(static_cast<size_t>(d) + 1, Rational(0));
  num[0] = Rational(-1);
  num[static_cast<size_t>(d)] = Rational(1);
  for (long e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto phi_e = cyclotomic_polynomial(e);
    Poly div(phi_e.size());
    for (size_t i = 0; i < phi_e.size(); ++i) div[i] = Rational(phi_e[i]);
    auto [q, r] = poly_divmod(num, div);
    if (!poly_is_zero(r)) throw IdentityFailure("cyclotomic division not exact");
    num = std::move(q);
  }
  std::vector<mpz_class> out(num.size());
  for (size_t i = 0; i < num.size(); ++i) {
    if (!num[i].is_integer()) throw IdentityFailure("cyclotomic coefficient not integral");
    out[i] = num[i].num();
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, out);
  return out;
}

inline long euler_phi(long d) {
  return static_cast<long>(cyclotomic_polynomial(d).size()) - 1;
}

// Element of Q(zeta_d) represented in the power basis of Q[x]/(Phi_d).
class Cyclotomic {
 public:
  explicit Cyclotomic(long order = 1)
      : d_(order), coeffs_(static_cast<size_t>(euler_phi(order)), Rational(0)) {}

  Cyclotomic(long order, const Rational& c) : Cyclotomic(order) {
    if (!coeffs_.empty()) coeffs_[0] = c;
  }

  static Cyclotomic from_poly(long order, Poly p) {
    Cyclotomic r(order);
    p = poly_mod(p, r.modulus());
    for (size_t i = 0; i < p.size(); ++i) r.coeffs_[i] = p[i];
    return r;
  }

  // zeta_d^k, periodic in k mod d
  static Cyclotomic root_of_unity(long order, long k) {
    k %= order;
    if (k < 0) k += order;
    Poly p(static_cast<size_t>(k) + 1, Rational(0));
    p[static_cast<size_t>(k)] = Rational(1);
    return from_poly(order, std::move(p));
  }

  long order() const { return d_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }

  // Constant coefficient; meaningful when is_rational().
  Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_orders(a, b);
    Cyclotomic r(a.d_);
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check_orders(a, b);
    Cyclotomic r(a.d_);
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  Cyclotomic operator-() const {
    Cyclotomic r(d_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_orders(a, b);
    return from_poly(a.d_, poly_mul(a.as_poly(), b.as_poly()));
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
    Cyclotomic r(a.d_);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] * s;
    return r;
  }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  // Phi_d is irreducible, so every nonzero element inverts via the
  // extended Euclidean algorithm against the modulus.
  Cyclotomic inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta)");
    auto [g, u] = poly_half_xgcd(as_poly(), modulus());
    if (poly_degree(g) != 0) throw IdentityFailure("Phi_d not coprime with nonzero element");
    return from_poly(d_, poly_scale(u, g[0].reciprocal()));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    check_orders(a, b);
    return a * b.inverse();
  }

  Cyclotomic pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic acc(d_, Rational(1)), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Poly as_poly() const {
    Poly p(coeffs_.begin(), coeffs_.end());
    poly_trim(p);
    return p;
  }

  Poly modulus() const {
    auto phi = cyclotomic_polynomial(d_);
    Poly m(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) m[i] = Rational(phi[i]);
    return m;
  }

 private:
  static void check_orders(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.d_ != b.d_) throw OrderMismatch("cyclotomic orders differ");
  }
  long d_;
  std::vector<Rational> coeffs_;
};

// zeta_d -> exp(2*pi*i/d) at the requested precision.
inline Complex embed(const Cyclotomic& a, long prec) {
  const long wp = prec + 32;
  Complex acc(wp);
  const auto& cs = a.coeffs();
  for (size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    Complex w = exp_2pi_i(Rational(static_cast<long>(k), a.order()), wp);
    acc = acc + w * Real(cs[k], wp);
  }
  return {Real(1L, prec) * acc.re, Real(1L, prec) * acc.im};
}

}  // namespace lgs
