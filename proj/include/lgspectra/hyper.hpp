#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "lgspectra/cyclotomic.hpp"
#include "lgspectra/weights.hpp"

namespace lgs {

// Index data (alpha_P, rho_Q) of the generalized hypergeometric equation
// attached to a weight system. rho holds rho_0 = 1 down to rho_q, strictly
// decreasing; alpha is a multiset of p positive rationals.
struct HypergeomSystem {
  WeightSystem ws;
  std::vector<long> nar_sorted;   // Nar ascending; N(m) = index of m here
  std::vector<Rational> rho;      // rho_0 .. rho_q
  std::vector<Rational> alpha;    // alpha_1 .. alpha_p
  long p = 0;
  long q = 0;

  long nmap(long m) const {
    auto it = std::lower_bound(nar_sorted.begin(), nar_sorted.end(), m);
    if (it == nar_sorted.end() || *it != m) throw NotNarrow("m is not a narrow index");
    return static_cast<long>(it - nar_sorted.begin());
  }
};

// rho_N(m) = 1/d + 1 - m/d; alpha from {1/d + k/w_j} with one deletion of
// (n+1)/d per non-narrow n in {0..d-1}.
inline HypergeomSystem build_hg_system(const WeightSystem& ws) {
  if (ws.nu <= 0) throw NotGeneralType("hypergeometric data needs nu > 0");
  HypergeomSystem hs;
  hs.ws = ws;
  hs.nar_sorted = ws.nar;
  for (long m : ws.nar) hs.rho.push_back(Rational(1, ws.d) + Rational(1) - Rational(m, ws.d));
  // ascending m gives descending rho already; rho_0 = 1 comes from m = 1
  hs.q = static_cast<long>(hs.rho.size()) - 1;

  std::vector<Rational> pool;
  for (long w : ws.weights)
    for (long k = 0; k < w; ++k) pool.push_back(Rational(1, ws.d) + Rational(k, w));
  std::sort(pool.begin(), pool.end());
  for (long n = 0; n < ws.d; ++n) {
    if (is_narrow(ws, n)) continue;
    Rational target(n + 1, ws.d);
    auto it = std::lower_bound(pool.begin(), pool.end(), target);
    if (it == pool.end() || *it != target)
      throw IdentityFailure("deletion value missing from the alpha pool");
    pool.erase(it);
  }
  hs.alpha = std::move(pool);
  hs.p = static_cast<long>(hs.alpha.size());

  // structural invariants
  if (hs.q + 1 != static_cast<long>(ws.nar.size()) || hs.p != hs.q + 1 - ws.nu)
    throw IdentityFailure("p, q, nu relation failed");
  if (hs.rho[0] != Rational(1)) throw IdentityFailure("rho_0 != 1");
  for (size_t i = 1; i < hs.rho.size(); ++i) {
    if (!(hs.rho[i] < hs.rho[i - 1])) throw IdentityFailure("rho not strictly decreasing");
    if (hs.rho[i].is_integer()) throw IdentityFailure("rho_j integral for j >= 1");
    for (size_t j = 0; j < i; ++j)
      if ((hs.rho[j] - hs.rho[i]).is_integer())
        throw IdentityFailure("two rho differ by an integer");
  }
  for (const auto& a : hs.alpha)
    for (const auto& r : hs.rho)
      if (a == r) throw IdentityFailure("alpha meets rho");
  Rational sum(0);
  for (const auto& a : hs.alpha) sum += a;
  for (size_t i = 1; i < hs.rho.size(); ++i) sum -= hs.rho[i];
  Rational expect = -Rational(ws.nu) * (Rational(1, 2) + Rational(1, ws.d)) +
                    Rational(3 - ws.N(), 2);
  if (sum != expect) throw IdentityFailure("alpha/rho sum identity failed");
  return hs;
}

// (alpha_P^(m), rho_Q^(m)): the parameter tuples of the pFq block of the
// solution f_N(m), with the unit entry of 1 + rho_i - rho_N(m) omitted.
inline std::pair<std::vector<Rational>, std::vector<Rational>> shifted_tuples(
    const HypergeomSystem& hs, long m) {
  const long j = hs.nmap(m);
  const Rational rj = hs.rho[static_cast<size_t>(j)];
  std::vector<Rational> am, rm;
  for (const auto& a : hs.alpha) am.push_back(Rational(1) + a - rj);
  for (long i = 0; i <= hs.q; ++i) {
    if (i == j) continue;
    rm.push_back(Rational(1) + hs.rho[static_cast<size_t>(i)] - rj);
  }
  Rational sum(0);
  for (const auto& a : am) sum += a;
  for (const auto& r : rm) sum -= r;
  Rational expect = -Rational(hs.ws.nu) * (Rational(1, 2) + Rational(m, hs.ws.d)) +
                    Rational(3 - hs.ws.N(), 2);
  if (sum != expect) throw IdentityFailure("shifted sum identity failed");
  return {am, rm};
}

// theta nu = (1-nu)/2 + sum_j (1-rho_j) - sum_i (1-alpha_i); checked against
// the closed form (2-N)/(2 nu) - 1/d.
inline Rational theta_exponent(const HypergeomSystem& hs) {
  Rational acc(1 - hs.ws.nu, 2);
  for (const auto& r : hs.rho) acc += Rational(1) - r;
  for (const auto& a : hs.alpha) acc -= Rational(1) - a;
  Rational theta = acc / Rational(hs.ws.nu);
  Rational expect = Rational(2 - hs.ws.N(), 2 * hs.ws.nu) - Rational(1, hs.ws.d);
  if (theta != expect) throw IdentityFailure("theta two-route mismatch");
  return theta;
}

// One monomial of the small I-function: coefficient of t^{d l + m} e_m.
// z_exp_original is the integer z-power in the raw series; z_exp_modified is
// the z-power -nu (d l + m - 1)/d after the z^Gr twist.
struct SeriesTerm {
  long m = 0;
  long ell = 0;
  Rational coeff;
  long z_exp_original = 0;
  Rational z_exp_modified;
};

inline Rational i_coefficient(const WeightSystem& ws, long m, long ell) {
  const long k = ws.d * ell + m;
  Rational c(mpz_class(1), factorial(k - 1));
  for (long w : ws.weights)
    c *= rising_factorial(Rational(w * m, ws.d).frac(), (w * k) / ws.d);
  return c;
}

inline std::vector<SeriesTerm> i_series(const WeightSystem& ws, long t_order) {
  if (t_order < 1) throw InvalidParameter("t_order must be >= 1");
  std::vector<SeriesTerm> terms;
  for (long m : ws.nar) {
    for (long ell = 0; ws.d * ell + m <= t_order; ++ell) {
      const long k = ws.d * ell + m;
      SeriesTerm t;
      t.m = m;
      t.ell = ell;
      t.coeff = i_coefficient(ws, m, ell);
      long floor_sum = 0;
      for (long w : ws.weights) floor_sum += (w * k) / ws.d;
      t.z_exp_original = 2 - k + floor_sum;
      t.z_exp_modified = -Rational(ws.nu * (k - 1), ws.d);
      terms.push_back(std::move(t));
    }
  }
  return terms;
}

struct OdeReport {
  long monomials_cancelled = 0;
  long t_order = 0;
};

// Applies both sides of the hypergeometric-type ODE annihilating the small
// I-function, term by term in exact rational arithmetic, and demands exact
// cancellation of every monomial of t-degree <= t_order.
inline OdeReport verify_i_ode(const WeightSystem& ws, long t_order) {
  if (t_order < 2 * ws.d) throw InvalidParameter("t_order must be >= 2d");
  HypergeomSystem hs = build_hg_system(ws);
  Rational c1(1);
  for (long w : ws.weights) c1 *= Rational(w).pow(w);
  c1 /= Rational(ws.d).pow(ws.d - ws.nu);

  std::map<std::pair<long, long>, Rational> acc;  // (t-exp, z-exp) -> coefficient
  for (const auto& term : i_series(ws, t_order)) {
    const long k = ws.d * term.ell + term.m;
    // first operator: t^d z^p c1 prod_i (t d/dt + alpha_i d - 1)
    Rational f1 = term.coeff * c1;
    for (const auto& a : hs.alpha) f1 *= Rational(k) + a * Rational(ws.d) - Rational(1);
    acc[{k + ws.d, term.z_exp_original + hs.p}] += f1;
    // second operator: z^{q+1} prod_j (t d/dt + (rho_j - 1) d - 1)
    Rational f2 = term.coeff;
    for (const auto& r : hs.rho)
      f2 *= Rational(k) + (r - Rational(1)) * Rational(ws.d) - Rational(1);
    acc[{k, term.z_exp_original + hs.q + 1}] -= f2;
  }
  OdeReport rep;
  rep.t_order = t_order;
  for (const auto& [key, value] : acc) {
    if (key.first > t_order) continue;  // boundary monomials above the truncation
    if (!value.is_zero())
      throw CancellationFailure("I-function ODE monomial did not cancel",
                                ((key.first - 1) % ws.d) + 1, (key.first - 1) / ws.d);
    ++rep.monomials_cancelled;
  }
  return rep;
}

// Truncated pFq sum with p <= q (entire regime). Working precision is the
// caller's job; the stopping rule waits for five consecutive terms below
// 2^{-prec} of the running maximum partial-sum magnitude, which survives
// interior cancellation humps.
inline Complex pfq(const std::vector<Rational>& alphas, const std::vector<Rational>& rhos,
                   const Complex& x, long prec) {
  if (alphas.size() > rhos.size())
    throw InvalidParameter("pfq implemented for p <= q only");
  for (const auto& r : rhos)
    if (r.sign() <= 0 && r.is_integer())
      throw PoleInPrefactor("pFq lower parameter is a nonpositive integer");
  const long wp = prec + 16;
  Complex term(1, wp), sum(1, wp);
  Real max_mag(1L, wp);
  const Real threshold = pow2(-prec, wp);
  int quiet = 0;
  for (long k = 0; k < 200000; ++k) {
    Rational step(1);
    for (const auto& a : alphas) step *= a + Rational(k);
    for (const auto& r : rhos) step /= r + Rational(k);
    step /= Rational(k + 1);
    term = term * x * Real(step, wp);
    sum = sum + term;
    Real mag = sum.abs();
    if (mag > max_mag) max_mag = mag;
    if (term.abs() < threshold * max_mag) {
      if (++quiet >= 5) return {Real(1L, prec) * sum.re, Real(1L, prec) * sum.im};
    } else {
      quiet = 0;
    }
  }
  throw PrecisionBudgetExceeded("pFq did not converge within the iteration budget");
}

// Gamma at any non-pole rational; negative arguments go through Euler
// reflection, reducing to gamma_eval on positive values.
inline Real gamma_any(const Rational& r, long prec) {
  if (r.sign() > 0) return gamma_eval(r, prec);
  if (r.is_integer()) throw PoleInPrefactor("Gamma pole at nonpositive integer");
  const long wp = prec + 32;
  Real pi = Real::pi(wp);
  Real s = (Real(r, wp) * pi).sin();
  return Real(1L, prec) * (pi / (s * gamma_eval(Rational(1) - r, wp)));
}

// Point on the positive ray of a chosen sheet: value = modulus * e^{2 pi i turns}.
// Powers use the recorded argument, so the Q-function branch rule is exact.
struct BranchedReal {
  Real modulus;
  Rational turns;

  BranchedReal(Real mod, Rational t) : modulus(std::move(mod)), turns(std::move(t)) {
    if (modulus.sign() <= 0) throw InvalidParameter("branched point needs modulus > 0");
  }
  BranchedReal rotated(const Rational& extra_turns) const {
    return {modulus, turns + extra_turns};
  }
  Complex value(long prec) const {
    return exp_2pi_i(turns, prec) * (Real(1L, prec) * modulus);
  }
  Complex pow(const Rational& e, long prec) const {
    Real mag = modulus.prec() >= prec ? modulus : Real(1L, prec) * modulus;
    Real r = mag.pow(Real(e, prec));
    return exp_2pi_i(e * turns, prec) * r;
  }
};

// Barnes Q-function Q_{N(m)}(x): Gamma prefactor, the branch-carrying power
// x^{1 - rho_N(m)}, and the entire pFq factor at (-1)^nu x.
inline Complex barnes_q(const HypergeomSystem& hs, long m, const BranchedReal& x, long prec) {
  const long wp = prec + 32;
  const long j = hs.nmap(m);
  const Rational rj = hs.rho[static_cast<size_t>(j)];
  Real pref(1L, wp);
  for (long i = 0; i <= hs.q; ++i) {
    if (i == j) continue;
    pref *= gamma_any(rj - hs.rho[static_cast<size_t>(i)], wp);
  }
  for (const auto& a : hs.alpha) pref /= gamma_any(rj - a, wp);
  auto [am, rm] = shifted_tuples(hs, m);
  Complex arg = x.rotated(Rational(hs.ws.nu, 2)).value(wp);
  Complex f = pfq(am, rm, arg, wp);
  Complex out = x.pow(Rational(1) - rj, wp) * f * pref;
  return {Real(1L, prec) * out.re, Real(1L, prec) * out.im};
}

enum class UpsilonMethod { GammaProduct, RootOfUnity };

// Upsilon(m) via either the Gamma-quotient definition or the root-of-unity
// identity; the two agree within 2^{-prec+32}.
inline Complex upsilon(const HypergeomSystem& hs, long m, long prec, UpsilonMethod method) {
  const long wp = prec + 48;
  const WeightSystem& ws = hs.ws;
  if (method == UpsilonMethod::GammaProduct) {
    auto [am, rm] = shifted_tuples(hs, m);
    // (-1)^{nu (1 - rho_N(m))} with (-1)^x := exp(i pi x); 1 - rho = (m-1)/d
    Complex acc = exp_2pi_i(Rational(ws.nu * (m - 1), 2 * ws.d), wp);
    for (const auto& a : am) acc = acc * (gamma_any(a, wp) * gamma_any(Rational(1) - a, wp));
    for (const auto& r : rm) {
      Real denom = gamma_any(r, wp) * gamma_any(Rational(1) - r, wp);
      acc = acc / Complex(Real(1L, wp) * denom, Real(wp));
    }
    return {Real(1L, prec) * acc.re, Real(1L, prec) * acc.im};
  }
  // d (2 pi)^{1-nu} e^{i pi (-nu/d - 1 - N/2)} prod_j (1 - omega^{m w_j})^{-1},
  // the product evaluated exactly in Q(zeta_d) before embedding
  Cyclotomic prod(ws.d, Rational(1));
  for (long w : ws.weights)
    prod *= Cyclotomic(ws.d, Rational(1)) - Cyclotomic::root_of_unity(ws.d, m * w);
  Complex inv = embed(prod.inverse(), wp);
  Rational phase_half = -Rational(ws.nu, ws.d) - Rational(1) - Rational(ws.N(), 2);
  Complex phase = exp_2pi_i(phase_half * Rational(1, 2), wp);
  Real two_pi = Real(2, wp) * Real::pi(wp);
  Real scale = Real(ws.d, wp) * two_pi.pow(Real(1 - ws.nu, wp));
  Complex acc = phase * inv * scale;
  return {Real(1L, prec) * acc.re, Real(1L, prec) * acc.im};
}

// Extra working bits needed to survive the exponential cancellation between
// the individually exp(+nu x^{1/nu})-sized Q's and their exp(-nu x^{1/nu})
// combination.
inline long cancellation_budget(long nu, const Real& modulus) {
  double x = modulus.to_double();
  if (x < 1) x = 1;
  double bits = 2.0 * static_cast<double>(nu) * std::pow(x, 1.0 / static_cast<double>(nu)) *
                1.4426950408889634;
  return static_cast<long>(bits) + 64;
}

// sum_{m in Nar} omega^{l m} Q_{N(m)}(x), evaluated on the sheet where
// x e^{2 pi i l} lies on the positive real axis (recorded argument -2 pi l).
// The working precision starts at the a-priori cancellation budget and
// escalates until the surviving bits cover the requested precision; the Q
// prefactors of high-order systems can cancel far beyond the exponential
// estimate.
inline Complex barnes_combination(const HypergeomSystem& hs, long ell, const Real& modulus,
                                  long prec) {
  if (ell < 1 - hs.ws.nu || ell > 0) throw InvalidParameter("need 1 - nu <= ell <= 0");
  long budget = cancellation_budget(hs.ws.nu, modulus);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const long wp = prec + budget;
    BranchedReal x(Real(1L, wp) * modulus, Rational(-ell));
    Complex acc(wp);
    long max_exp = LONG_MIN;
    for (long m : hs.ws.nar) {
      Complex w = exp_2pi_i(Rational(ell * m, hs.ws.d), wp);
      Complex term = w * barnes_q(hs, m, x, wp);
      Real mag = term.abs();
      if (!mag.is_zero()) max_exp = std::max(max_exp, mag.exponent());
      acc = acc + term;
    }
    Real mag = acc.abs();
    if (!mag.is_zero()) {
      const long loss = max_exp - mag.exponent();  // bits destroyed by cancellation
      if (loss <= budget - 16)
        return {Real(1L, prec) * acc.re, Real(1L, prec) * acc.im};
      budget = loss + 96;
    } else {
      budget = 2 * budget + 128;
    }
  }
  throw PrecisionBudgetExceeded("Barnes combination kept cancelling past the budget");
}

// Ratio of the combination against the leading Barnes asymptotic term
// e^{(2-N) pi i l / nu} (2 pi)^{(nu-1)/2} nu^{-1/2} exp(-nu (x e^{2 pi i l})^{1/nu}) x^theta.
// Tends to 1 as the modulus grows, at rate O(x^{-1/nu}).
inline Complex barnes_ratio(const HypergeomSystem& hs, long ell, const Real& modulus,
                            long prec) {
  const long nu = hs.ws.nu;
  const long wp = prec + 32;
  Complex comb = barnes_combination(hs, ell, modulus, wp);
  BranchedReal x(Real(1L, wp) * modulus, Rational(-ell));

  Complex phase = exp_2pi_i(Rational((2 - hs.ws.N()) * ell, 2 * nu), wp);
  Real two_pi = Real(2, wp) * Real::pi(wp);
  Real front = two_pi.pow(Real(Rational(nu - 1, 2), wp)) / Real(nu, wp).sqrt();
  // (x e^{2 pi i l})^{1/nu} is positive real on this sheet
  Complex root = x.rotated(Rational(ell)).pow(Rational(1, nu), wp);
  Real decay = (-(Real(nu, wp) * root.re)).exp();
  Complex xtheta = x.pow(theta_exponent(hs), wp);
  Complex denom = phase * xtheta * (front * decay);
  Complex out = comb / denom;
  return {Real(1L, prec) * out.re, Real(1L, prec) * out.im};
}

}  // namespace lgs
