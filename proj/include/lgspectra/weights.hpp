#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lgspectra/errors.hpp"
#include "lgspectra/rational.hpp"
#include "lgspectra/real.hpp"

namespace lgs {

// Weight system (d; w_1, ..., w_N) of an LG pair (W, <J>), with the derived
// combinatorial invariants. Custom systems are combinatorics-only: the
// nondegeneracy of an underlying polynomial is not checkable from (d; w).
struct WeightSystem {
  long d = 0;
  std::vector<long> weights;
  long nu = 0;               // index d - sum(w_j); general type means nu > 0
  Rational c_hat;            // central charge sum(1 - 2 w_j / d)
  std::vector<long> nar;     // narrow indices, sorted
  bool from_family = false;  // true when produced by a named-family constructor

  long N() const { return static_cast<long>(weights.size()); }

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
    return a.d == b.d && a.weights == b.weights;
  }
};

inline std::vector<long> narrow_indices(long d, const std::vector<long>& weights) {
  std::vector<long> nar;
  for (long m = 1; m < d; ++m) {
    bool narrow = true;
    for (long w : weights) {
      if ((w * m) % d == 0) {
        narrow = false;
        break;
      }
    }
    if (narrow) nar.push_back(m);
  }
  return nar;
}

inline std::vector<long> narrow_indices(const WeightSystem& ws) { return ws.nar; }

inline WeightSystem make_weight_system(long d, std::vector<long> weights,
                                       bool from_family = false) {
  if (weights.empty()) throw EmptyWeights("weight system needs at least one weight");
  if (d < 1) throw ParseError("degree must be positive");
  long g = 0;
  for (long w : weights) {
    if (w < 1) throw ParseError("weights must be positive");
    g = std::gcd(g, w);
  }
  if (g != 1) throw GcdViolation("gcd of weights must be 1");
  WeightSystem ws;
  ws.d = d;
  ws.weights = std::move(weights);
  ws.nu = d - std::accumulate(ws.weights.begin(), ws.weights.end(), 0L);
  ws.c_hat = Rational(0);
  for (long w : ws.weights) ws.c_hat += Rational(1) - Rational(2 * w, d);
  ws.nar = narrow_indices(d, ws.weights);
  ws.from_family = from_family;
  return ws;
}

// Grammar: d;w1,w2,...,wN  (ASCII digits, ';' and ',' only)
inline WeightSystem parse_weight_system(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("expected 'd;w1,...,wN'");
  auto parse_long = [](const std::string& s) -> long {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a positive integer, got '" + s + "'");
    if (s.size() > 9) throw ParseError("integer out of range: '" + s + "'");
    return std::stol(s);
  };
  long d = parse_long(text.substr(0, semi));
  std::vector<long> weights;
  std::string rest = text.substr(semi + 1);
  if (rest.empty()) throw EmptyWeights("weight system needs at least one weight");
  size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string tok =
        comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
    weights.push_back(parse_long(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return make_weight_system(d, std::move(weights));
}

// Named families. Grammar: A:n, DT:n, E6, E7, E8, Fermat:d,N
struct FamilySpec {
  enum class Kind { A, DT, E6, E7, E8, Fermat };
  Kind kind = Kind::A;
  long n = 0;  // A: A_n singularity x^{n+1}; DT: x^n y + y^2
  long d = 0, N = 0;  // Fermat parameters

  static FamilySpec a_type(long n) { return {Kind::A, n, 0, 0}; }
  static FamilySpec dt(long n) { return {Kind::DT, n, 0, 0}; }
  static FamilySpec e6() { return {Kind::E6, 0, 0, 0}; }
  static FamilySpec e7() { return {Kind::E7, 0, 0, 0}; }
  static FamilySpec e8() { return {Kind::E8, 0, 0, 0}; }
  static FamilySpec fermat(long d, long N) { return {Kind::Fermat, 0, d, N}; }

  static FamilySpec parse(const std::string& text) {
    auto parse_long = [&](const std::string& s) -> long {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad family parameter '" + s + "' in '" + text + "'");
      return std::stol(s);
    };
    if (text == "E6") return e6();
    if (text == "E7") return e7();
    if (text == "E8") return e8();
    if (text.rfind("A:", 0) == 0) return a_type(parse_long(text.substr(2)));
    if (text.rfind("DT:", 0) == 0) return dt(parse_long(text.substr(3)));
    if (text.rfind("Fermat:", 0) == 0) {
      std::string rest = text.substr(7);
      auto comma = rest.find(',');
      if (comma == std::string::npos) throw ParseError("Fermat needs 'Fermat:d,N'");
      return fermat(parse_long(rest.substr(0, comma)), parse_long(rest.substr(comma + 1)));
    }
    throw ParseError("unknown family '" + text + "'");
  }

  std::string name() const {
    switch (kind) {
      case Kind::A: return "A:" + std::to_string(n);
      case Kind::DT: return "DT:" + std::to_string(n);
      case Kind::E6: return "E6";
      case Kind::E7: return "E7";
      case Kind::E8: return "E8";
      case Kind::Fermat: return "Fermat:" + std::to_string(d) + "," + std::to_string(N);
    }
    return "?";
  }
};

inline WeightSystem family(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::A:
      if (spec.n < 1) throw InvalidParameter("A:n requires n >= 1");
      return make_weight_system(spec.n + 1, {1}, true);
    case K::DT:  // D^T_{n+1}: x^n y + y^2
      if (spec.n < 3) throw InvalidParameter("DT:n requires n >= 3");
      return make_weight_system(2 * spec.n, {1, spec.n}, true);
    case K::E6: return make_weight_system(12, {4, 3}, true);
    case K::E7: return make_weight_system(9, {2, 3}, true);
    case K::E8: return make_weight_system(15, {5, 3}, true);
    case K::Fermat:
      if (spec.N < 1 || spec.d - spec.N < 1)
        throw InvalidParameter("Fermat:d,N requires 1 <= N and d - N >= 1");
      return make_weight_system(spec.d, std::vector<long>(spec.N, 1), true);
  }
  throw UnsupportedFamily("unhandled family kind");
}

// Either a weight system literal or a family tag.
inline WeightSystem parse_input(const std::string& text) {
  if (text.find(';') != std::string::npos) return parse_weight_system(text);
  return family(FamilySpec::parse(text));
}

inline bool is_narrow(const WeightSystem& ws, long m) {
  return std::binary_search(ws.nar.begin(), ws.nar.end(), m);
}

struct SectorData {
  long m = 0;
  std::vector<Rational> thetas;  // {w_j m / d}, all in (0,1) on narrow sectors
  Rational mu;                   // -N/2 + sum thetas
  Rational deg;                  // c_hat/2 + mu
};

inline Rational hodge_mu(const WeightSystem& ws, long m) {
  Rational mu(-ws.N(), 2);
  for (long w : ws.weights) mu += Rational(w * m, ws.d).frac();
  return mu;
}

inline SectorData sector_data(const WeightSystem& ws, long m) {
  if (!is_narrow(ws, m)) throw NotNarrow("m is not a narrow index");
  SectorData s;
  s.m = m;
  for (long w : ws.weights) s.thetas.push_back(Rational(w * m, ws.d).frac());
  s.mu = hodge_mu(ws, m);
  s.deg = ws.c_hat * Rational(1, 2) + s.mu;
  return s;
}

// Mir_{>=2} from the floor-sum criterion; 1 joins exactly when nu = 1.
inline std::vector<long> mir_set(const WeightSystem& ws) {
  if (ws.nu <= 0) throw NotGeneralType("Mir needs nu > 0");
  std::vector<long> mir;
  if (ws.nu == 1) mir.push_back(1);
  for (long m : ws.nar) {
    if (m == 1) continue;
    long floor_sum = 0;
    for (long w : ws.weights) floor_sum += (w * m) / ws.d;
    if (m - 1 - floor_sum == 1) mir.push_back(m);
  }
  std::sort(mir.begin(), mir.end());
  return mir;
}

// tau evaluated at t = 1: the z^0 layer of the small I-function. Gamma
// ratios are rewritten as rising-factorial products, so every coefficient
// is an exact rational.
inline std::map<long, Rational> tau_coefficients(const WeightSystem& ws) {
  if (ws.nu <= 0) throw NotGeneralType("tau needs nu > 0");
  std::map<long, Rational> tau;
  for (long m : mir_set(ws)) {
    if (m == 1) {
      // coefficient of t^d: (1/d!) prod_j Gamma(w_j + w_j/d) / Gamma(w_j/d)
      Rational c(mpz_class(1), factorial(ws.d));
      for (long w : ws.weights) c *= rising_factorial(Rational(w, ws.d), w);
      tau[1] = c;
    } else {
      Rational c(mpz_class(1), factorial(m - 1));
      for (long w : ws.weights)
        c *= rising_factorial(Rational(w * m, ws.d).frac(), (w * m) / ws.d);
      tau[m] = c;
      // Euler-field identity, coefficientwise: 1 - deg(e_m) = nu (m-1)/d
      SectorData s = sector_data(ws, m);
      if (Rational(1) - s.deg != Rational(ws.nu * (m - 1), ws.d))
        throw IdentityFailure("Euler-field degree identity failed for m in Mir");
    }
  }
  return tau;
}

// T = nu (d^-d prod w^w)^(1/nu), the conjectured principal eigenvalue.
inline Real principal_T(const WeightSystem& ws, long prec) {
  if (ws.nu <= 0) throw NotGeneralType("T needs nu > 0");
  const long wp = prec + 32;
  Rational base(1);
  for (long w : ws.weights) base *= Rational(w).pow(w);
  base /= Rational(ws.d).pow(ws.d);
  Real t = Real(base, wp).pow(Real(Rational(1, ws.nu), wp)) * Real(ws.nu, wp);
  return Real(1L, prec) * t;
}

}  // namespace lgs
