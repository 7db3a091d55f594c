#pragma once

#include <utility>
#include <vector>

#include "lgspectra/errors.hpp"
#include "lgspectra/rational.hpp"
#include "lgspectra/real.hpp"

namespace lgs {

// Dense polynomials over Q, coefficient k is the x^k coefficient.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline long poly_degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

inline bool poly_is_zero(const Poly& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

inline Poly poly_scale(const Poly& a, const Rational& s) {
  Poly r = a;
  for (auto& c : r) c *= s;
  poly_trim(r);
  return r;
}

// quotient, remainder with deg(rem) < deg(b)
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  Poly rem = a, div = b;
  poly_trim(rem);
  poly_trim(div);
  if (div.empty()) throw DivisionByZero("polynomial division by zero");
  Poly quot;
  if (rem.size() >= div.size()) quot.assign(rem.size() - div.size() + 1, Rational(0));
  const Rational lead = div.back();
  while (rem.size() >= div.size() && !rem.empty()) {
    const size_t shift = rem.size() - div.size();
    Rational c = rem.back() / lead;
    quot[shift] = c;
    for (size_t i = 0; i < div.size(); ++i) rem[shift + i] -= c * div[i];
    poly_trim(rem);
  }
  poly_trim(quot);
  return {quot, rem};
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
  return r;
}

inline Poly poly_monic(const Poly& p) {
  Poly r = p;
  poly_trim(r);
  if (r.empty()) return r;
  const Rational lead = r.back();
  for (auto& c : r) c /= lead;
  return r;
}

// monic gcd over Q
inline Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

// g = gcd(a, m) together with u such that u*a = g (mod m)
inline std::pair<Poly, Poly> poly_half_xgcd(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a;
  Poly u0 = {}, u1 = {Rational(1)};
  poly_trim(r0);
  poly_trim(r1);
  while (!r1.empty()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {r0, u0};
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline Complex poly_eval(const Poly& p, const Complex& x, long prec) {
  Complex acc(prec);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + Complex(p[i], prec);
  return acc;
}

}  // namespace lgs
