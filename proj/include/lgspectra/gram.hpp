#pragma once

#include <gmpxx.h>

#include <vector>

#include "lgspectra/classes.hpp"
#include "lgspectra/weights.hpp"

namespace lgs {

// Coefficients a(0..d-nu) of P^A(x) = prod_j (1 - x^{w_j}).
inline std::vector<mpz_class> aw_coefficients(const WeightSystem& ws) {
  if (ws.nu <= 0) throw NotGeneralType("a(n) needs nu > 0");
  std::vector<mpz_class> a{1};
  for (long w : ws.weights) {
    std::vector<mpz_class> next(a.size() + static_cast<size_t>(w), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      next[i] += a[i];
      next[i + static_cast<size_t>(w)] -= a[i];
    }
    a = std::move(next);
  }
  return a;  // degree d - nu
}

// a(n) extended by zero up to n < d (degree bound).
inline mpz_class aw_at(const std::vector<mpz_class>& a, long n) {
  if (n < 0 || n >= static_cast<long>(a.size())) return 0;
  return a[static_cast<size_t>(n)];
}

namespace detail {
inline mpz_class count_partitions(const std::vector<long>& w, size_t j, long n) {
  if (n == 0) return 1;
  if (j == w.size()) return 0;
  mpz_class total = 0;
  for (long k = 0; k * w[j] <= n; ++k) total += count_partitions(w, j + 1, n - k * w[j]);
  return total;
}
}  // namespace detail

// L_w(n): partitions of n with parts from the weight tuple, via power-series
// inversion of P^A; cross-checked against direct enumeration for n <= 20.
inline std::vector<mpz_class> partition_counts(const WeightSystem& ws, long nmax) {
  if (nmax < 0) throw InvalidParameter("nmax must be nonnegative");
  auto a = aw_coefficients(ws);
  std::vector<mpz_class> L(static_cast<size_t>(nmax) + 1, 0);
  L[0] = 1;
  for (long n = 1; n <= nmax; ++n) {
    mpz_class acc = 0;
    for (long k = 1; k <= n && k < static_cast<long>(a.size()); ++k)
      acc += a[static_cast<size_t>(k)] * L[static_cast<size_t>(n - k)];
    L[static_cast<size_t>(n)] = -acc;
  }
  for (long n = 0; n <= std::min(nmax, 20L); ++n) {
    if (L[static_cast<size_t>(n)] != detail::count_partitions(ws.weights, 0, n))
      throw IdentityFailure("partition count mismatch between inversion and enumeration");
  }
  return L;
}

// Exact cyclotomic evaluation of (1/d) sum_{m in Nar} w^{nm} prod_j (1 - w^{-w_j m}).
// The result must be a rational integer and must equal a(n).
inline mpz_class euler_pairing_entry(const WeightSystem& ws, long n) {
  if (n < 0 || n >= ws.d) throw InvalidParameter("need 0 <= n < d");
  const long d = ws.d;
  Cyclotomic acc(d);
  for (long m : ws.nar) {
    Cyclotomic term = Cyclotomic::root_of_unity(d, n * m);
    for (long w : ws.weights)
      term *= Cyclotomic(d, Rational(1)) - Cyclotomic::root_of_unity(d, -w * m);
    acc += term;
  }
  acc = acc * Rational(1, d);
  if (!acc.is_rational() || !acc.rational_part().is_integer())
    throw NonIntegerResult("Euler pairing entry is not a rational integer");
  mpz_class value = acc.rational_part().num();
  if (value != aw_at(aw_coefficients(ws), n))
    throw IdentityFailure("Euler pairing entry disagrees with a(n)");
  return value;
}

// Gram matrix of the exceptional collection (C(l)^st, ..., C(l-nu+1)^st):
// unit upper triangular with M[j][j+n] = a(n); l-independent.
inline std::vector<std::vector<mpz_class>> gram_matrix(const WeightSystem& ws) {
  if (ws.nu <= 0) throw NotGeneralType("Gram matrix needs nu > 0");
  auto a = aw_coefficients(ws);
  const size_t nu = static_cast<size_t>(ws.nu);
  std::vector<std::vector<mpz_class>> M(nu, std::vector<mpz_class>(nu, 0));
  for (size_t j = 0; j < nu; ++j)
    for (size_t k = j; k < nu; ++k) M[j][k] = aw_at(a, static_cast<long>(k - j));
  return M;
}

inline std::vector<std::vector<mpz_class>> gram_inverse(const WeightSystem& ws) {
  auto M = gram_matrix(ws);
  const size_t nu = M.size();
  // back-substitution against the identity; exact since diag(M) = 1
  std::vector<std::vector<mpz_class>> X(nu, std::vector<mpz_class>(nu, 0));
  for (size_t col = 0; col < nu; ++col) {
    for (size_t i = col + 1; i-- > 0;) {
      mpz_class acc = (i == col) ? 1 : 0;
      for (size_t k = i + 1; k <= col; ++k) acc -= M[i][k] * X[k][col];
      X[i][col] = acc;
    }
  }
  // M X = I exactly
  for (size_t i = 0; i < nu; ++i)
    for (size_t j = 0; j < nu; ++j) {
      mpz_class acc = 0;
      for (size_t k = 0; k < nu; ++k) acc += M[i][k] * X[k][j];
      if (acc != (i == j ? 1 : 0)) throw IdentityFailure("M * Minv != I");
    }
  // superdiagonals are the partition counts L_w(n)
  auto L = partition_counts(ws, ws.nu - 1);
  for (size_t j = 0; j < nu; ++j)
    for (size_t k = j; k < nu; ++k)
      if (X[j][k] != L[k - j]) throw IdentityFailure("Minv entry != L_w(n)");
  return X;
}

// Stokes coefficients of exponential type: d_h = L_w(nu - h), h = 1..nu.
// Satisfies sum_{i=0}^{j} a(i) d_{nu-j+i} = delta_{j0} and d_nu = 1.
inline std::vector<mpz_class> stokes_coefficients(const WeightSystem& ws) {
  if (ws.nu <= 0) throw NotGeneralType("Stokes coefficients need nu > 0");
  auto L = partition_counts(ws, ws.nu - 1);
  auto a = aw_coefficients(ws);
  std::vector<mpz_class> dh(static_cast<size_t>(ws.nu) + 1, 0);  // 1-based
  for (long h = 1; h <= ws.nu; ++h) dh[static_cast<size_t>(h)] = L[static_cast<size_t>(ws.nu - h)];
  if (dh[static_cast<size_t>(ws.nu)] != 1) throw IdentityFailure("d_nu != 1");
  for (long j = 0; j < ws.nu; ++j) {
    mpz_class acc = 0;
    for (long i = 0; i <= j; ++i) acc += aw_at(a, i) * dh[static_cast<size_t>(ws.nu - j + i)];
    if (acc != (j == 0 ? 1 : 0)) throw IdentityFailure("Stokes recursion failed");
  }
  dh.erase(dh.begin());
  return dh;  // d_1 .. d_nu
}

struct GramData {
  WeightSystem ws;
  std::vector<mpz_class> a;
  std::vector<mpz_class> L;
  std::vector<std::vector<mpz_class>> M;
  std::vector<std::vector<mpz_class>> Minv;
  std::vector<mpz_class> stokes;
};

inline GramData build_gram(const WeightSystem& ws) {
  return {ws,
          aw_coefficients(ws),
          partition_counts(ws, ws.nu - 1),
          gram_matrix(ws),
          gram_inverse(ws),
          stokes_coefficients(ws)};
}

}  // namespace lgs
