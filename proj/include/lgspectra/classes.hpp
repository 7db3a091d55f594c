#pragma once

#include <map>

#include "lgspectra/cyclotomic.hpp"
#include "lgspectra/weights.hpp"

namespace lgs {

// State-space vectors supported on narrow sectors. Absent keys mean zero.
struct NarrowVectorExact {
  WeightSystem ws;
  std::map<long, Cyclotomic> coeffs;
};

struct NarrowVectorNumeric {
  WeightSystem ws;
  std::map<long, Complex> coeffs;
  long precision = 64;
};

namespace detail {
inline void check_same_ws(const WeightSystem& a, const WeightSystem& b) {
  if (!(a == b)) throw FlavorMismatch("vectors live over different weight systems");
}
}  // namespace detail

// Chern character of the twisted stabilization C(l)^st:
// coefficient of e_m is omega^{-l m} prod_j (1 - omega^{w_j m}); d-periodic in l.
inline NarrowVectorExact chern_stab(const WeightSystem& ws, long ell) {
  NarrowVectorExact v{ws, {}};
  for (long m : ws.nar) {
    Cyclotomic c = Cyclotomic::root_of_unity(ws.d, -ell * m);
    for (long w : ws.weights)
      c *= Cyclotomic(ws.d, Rational(1)) - Cyclotomic::root_of_unity(ws.d, w * m);
    v.coeffs.emplace(m, std::move(c));
  }
  return v;
}

// (-1)^x with the branch fixed as exp(i pi x); pinned empirically by the
// Gamma/asymptotic and HRR compatibility checks.
inline Complex minus_one_pow(const Rational& x, long prec) {
  return exp_2pi_i(x * Rational(1, 2), prec);
}

// Gamma map applied to the Chern character of C(l)^st: each coefficient of
// chern_stab picks up (-1)^{-mu(J^m)} prod_j Gamma(1 - theta_j(J^m)).
inline NarrowVectorNumeric gamma_class(const WeightSystem& ws, long ell, long prec) {
  const long wp = prec + 32;
  NarrowVectorNumeric v{ws, {}, prec};
  NarrowVectorExact ch = chern_stab(ws, ell);
  for (long m : ws.nar) {
    SectorData s = sector_data(ws, m);
    Complex factor = minus_one_pow(-s.mu, wp);
    for (const auto& theta : s.thetas)
      factor = factor * gamma_eval(Rational(1) - theta, wp);
    Complex c = factor * embed(ch.coeffs.at(m), wp);
    v.coeffs.emplace(m, Complex(Real(1L, prec) * c.re, Real(1L, prec) * c.im));
  }
  return v;
}

// The class A_l: coefficient of e_m is omega^{-l m} prod_j 2 pi / Gamma({w_j m / d}).
inline NarrowVectorNumeric asymptotic_class(const WeightSystem& ws, long ell, long prec) {
  const long wp = prec + 32;
  NarrowVectorNumeric v{ws, {}, prec};
  const Real two_pi = Real(2, wp) * Real::pi(wp);
  for (long m : ws.nar) {
    Complex c = exp_2pi_i(Rational(-ell * m, ws.d), wp);
    for (long w : ws.weights)
      c = c * (two_pi / gamma_eval(Rational(w * m, ws.d).frac(), wp));
    v.coeffs.emplace(m, Complex(Real(1L, prec) * c.re, Real(1L, prec) * c.im));
  }
  return v;
}

// <e_m, e_{d-m}> = 1 on narrow sectors.
inline Cyclotomic narrow_pairing(const NarrowVectorExact& u, const NarrowVectorExact& v) {
  detail::check_same_ws(u.ws, v.ws);
  Cyclotomic acc(u.ws.d);
  for (const auto& [m, um] : u.coeffs) {
    auto it = v.coeffs.find(u.ws.d - m);
    if (it != v.coeffs.end()) acc += um * it->second;
  }
  return acc;
}

inline Complex narrow_pairing(const NarrowVectorNumeric& u, const NarrowVectorNumeric& v) {
  detail::check_same_ws(u.ws, v.ws);
  Complex acc(std::min(u.precision, v.precision));
  for (const auto& [m, um] : u.coeffs) {
    auto it = v.coeffs.find(u.ws.d - m);
    if (it != v.coeffs.end()) acc = acc + um * it->second;
  }
  return acc;
}

// Canonical Hochschild pairing restricted to <J> with |G| = d; narrow g = J^m
// has fixed locus {0} and det[1-g] = prod_j (1 - omega^{w_j m}).
inline Cyclotomic pv_pairing(const NarrowVectorExact& u, const NarrowVectorExact& v) {
  detail::check_same_ws(u.ws, v.ws);
  const long d = u.ws.d;
  Cyclotomic acc(d);
  for (long m : u.ws.nar) {
    auto vm = v.coeffs.find(m);
    auto ud = u.coeffs.find(d - m);
    if (vm == v.coeffs.end() || ud == u.coeffs.end()) continue;
    Cyclotomic det(d, Rational(1));
    for (long w : u.ws.weights)
      det *= Cyclotomic(d, Rational(1)) - Cyclotomic::root_of_unity(d, w * m);
    acc += ud->second * vm->second * det.inverse();
  }
  return acc * Rational(1, d);
}

// Non-symmetric pairing [u, v) = (1/d) sum_m (-1)^{-mu(J^m)} / (2 pi)^N u_{d-m} v_m.
// The 2 pi power carries no sign here: with the exp(i pi x) branch for
// (-1)^x, a signed denominator would shift the Gamma-structure
// compatibility [Gamma(A), Gamma(B)) = (A, B)^PV by (-1)^N. The HRR
// checks pin this normalization.
inline Complex nonsym_pairing(const NarrowVectorNumeric& u, const NarrowVectorNumeric& v) {
  detail::check_same_ws(u.ws, v.ws);
  const long prec = std::min(u.precision, v.precision);
  const long wp = prec + 32;
  const long d = u.ws.d;
  Complex acc(wp);
  for (long m : u.ws.nar) {
    auto vm = v.coeffs.find(m);
    auto ud = u.coeffs.find(d - m);
    if (vm == v.coeffs.end() || ud == u.coeffs.end()) continue;
    Complex term = minus_one_pow(-hodge_mu(u.ws, m), wp) * ud->second * vm->second;
    acc = acc + term;
  }
  Real two_pi = Real(2, wp) * Real::pi(wp);
  Complex denom(Real(1L, wp) * two_pi.pow(Real(u.ws.N(), wp)) * Real(d, wp), Real(wp));
  Complex out = acc / denom;
  return {Real(1L, prec) * out.re, Real(1L, prec) * out.im};
}

inline Real max_coeff_distance(const NarrowVectorNumeric& u, const NarrowVectorNumeric& v) {
  detail::check_same_ws(u.ws, v.ws);
  Real best(std::min(u.precision, v.precision));
  for (long m : u.ws.nar) {
    Complex a = u.coeffs.count(m) ? u.coeffs.at(m) : Complex(best.prec());
    Complex b = v.coeffs.count(m) ? v.coeffs.at(m) : Complex(best.prec());
    Real dist = (a - b).abs();
    if (dist > best) best = dist;
  }
  return best;
}

}  // namespace lgs
