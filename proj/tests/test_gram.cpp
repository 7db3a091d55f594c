#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <random>

#include "lgspectra/gram.hpp"

using namespace lgs;

namespace {

std::vector<long> to_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

// deterministic random general-type weight systems, gcd 1, d <= 60
WeightSystem random_system(std::mt19937& rng) {
  std::uniform_int_distribution<long> dd(2, 60), nn(1, 5);
  for (;;) {
    long d = dd(rng), N = nn(rng);
    std::vector<long> w(static_cast<size_t>(N));
    long sum = 0;
    for (auto& x : w) {
      x = 1 + static_cast<long>(rng() % static_cast<unsigned long>(d));
      sum += x;
    }
    if (sum >= d) continue;
    long g = 0;
    for (long x : w) g = std::gcd(g, x);
    if (g != 1) continue;
    return make_weight_system(d, w);
  }
}

}  // namespace

TEST_CASE("a(n) coefficients") {
  CHECK(to_longs(aw_coefficients(parse_weight_system("9;2,3"))) ==
        std::vector<long>{1, 0, -1, -1, 0, 1});
  CHECK(to_longs(aw_coefficients(parse_weight_system("12;4,3"))) ==
        std::vector<long>{1, 0, 0, -1, -1, 0, 0, 1});
  CHECK(to_longs(aw_coefficients(parse_weight_system("7;1"))) == std::vector<long>{1, -1});
  // degree bound: a(n) = 0 for d - nu < n < d by construction
  auto a = aw_coefficients(parse_weight_system("15;5,3"));
  CHECK(static_cast<long>(a.size()) == 9);  // degree d - nu = 8
}

TEST_CASE("a(n) symmetry") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    auto ws = random_system(rng);
    auto a = aw_coefficients(ws);
    long top = ws.d - ws.nu;
    long sign = ws.N() % 2 == 0 ? 1 : -1;
    for (long n = 0; n <= top; ++n) CHECK(aw_at(a, top - n) == sign * aw_at(a, n));
  }
}

TEST_CASE("partition counts") {
  CHECK(to_longs(partition_counts(parse_weight_system("9;2,3"), 4)) ==
        std::vector<long>{1, 0, 1, 1, 1});
  CHECK(to_longs(partition_counts(parse_weight_system("12;4,3"), 4)) ==
        std::vector<long>{1, 0, 0, 1, 1});
  CHECK(to_longs(partition_counts(parse_weight_system("9;1"), 6)) ==
        std::vector<long>{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("magic identity: exact Euler pairing equals a(n)") {
  for (const char* txt : {"9;2,3", "12;4,3", "15;5,3", "8;1,4", "7;1,1,1", "5;1"}) {
    auto ws = parse_weight_system(txt);
    auto a = aw_coefficients(ws);
    for (long n = 0; n < ws.d; ++n) CHECK(euler_pairing_entry(ws, n) == aw_at(a, n));
  }
  // hand-checked instance: (3;1,1), n=0 -> 1
  CHECK(euler_pairing_entry(parse_weight_system("3;1,1"), 0) == 1);
  // (9;2,3), n=2 -> -1
  CHECK(euler_pairing_entry(parse_weight_system("9;2,3"), 2) == -1);
  // zero window d - nu < n < d
  auto e6 = parse_weight_system("12;4,3");
  for (long n = e6.d - e6.nu + 1; n < e6.d; ++n) CHECK(euler_pairing_entry(e6, n) == 0);
}

TEST_CASE("magic identity on randomized weight systems") {
  std::mt19937 rng(20240812);
  for (int t = 0; t < 25; ++t) {
    auto ws = random_system(rng);
    auto a = aw_coefficients(ws);
    for (long n = 0; n < ws.d; ++n) REQUIRE(euler_pairing_entry(ws, n) == aw_at(a, n));
  }
}

TEST_CASE("Gram matrix and inverse fixtures") {
  auto e7 = parse_weight_system("9;2,3");
  auto M = gram_matrix(e7);
  std::vector<std::vector<long>> expectM = {
      {1, 0, -1, -1}, {0, 1, 0, -1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (size_t i = 0; i < 4; ++i) CHECK(to_longs(M[i]) == expectM[i]);
  auto Minv = gram_inverse(e7);
  std::vector<std::vector<long>> expectI = {
      {1, 0, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (size_t i = 0; i < 4; ++i) CHECK(to_longs(Minv[i]) == expectI[i]);

  // d-spin: bidiagonal M, all-ones upper triangular inverse
  auto spin = parse_weight_system("6;1");
  auto Ms = gram_matrix(spin);
  auto Is = gram_inverse(spin);
  for (size_t i = 0; i < Ms.size(); ++i)
    for (size_t j = 0; j < Ms.size(); ++j) {
      CHECK(Ms[i][j] == (i == j ? 1 : (j == i + 1 ? -1 : 0)));
      CHECK(Is[i][j] == (j >= i ? 1 : 0));
    }

  // (12;4,3): inverse superdiagonals are L_w = 1,0,0,1,1
  auto e6inv = gram_inverse(parse_weight_system("12;4,3"));
  std::vector<long> diag0;
  for (size_t j = 0; j + 0 < e6inv.size(); ++j) diag0.push_back(e6inv[0][j].get_si());
  CHECK(diag0 == std::vector<long>{1, 0, 0, 1, 1});
}

TEST_CASE("Stokes coefficients") {
  CHECK(to_longs(stokes_coefficients(parse_weight_system("12;4,3"))) ==
        std::vector<long>{1, 1, 0, 0, 1});
  CHECK(to_longs(stokes_coefficients(parse_weight_system("9;2,3"))) ==
        std::vector<long>{1, 1, 0, 1});
  CHECK(to_longs(stokes_coefficients(parse_weight_system("7;1"))) ==
        std::vector<long>{1, 1, 1, 1, 1, 1});
  std::mt19937 rng(77);
  for (int t = 0; t < 25; ++t) {
    auto ws = random_system(rng);
    auto dh = stokes_coefficients(ws);  // recursion asserted internally
    CHECK(dh.back() == 1);
  }
}

TEST_CASE("r-spin Cartan check") {
  for (long d = 2; d <= 10; ++d) {
    auto ws = make_weight_system(d, {1});
    auto M = gram_matrix(ws);
    const size_t nu = M.size();
    for (size_t i = 0; i < nu; ++i)
      for (size_t j = 0; j < nu; ++j) {
        mpz_class c = M[i][j] + M[j][i];
        long expect = (i == j) ? 2 : ((i + 1 == j || j + 1 == i) ? -1 : 0);
        CHECK(c == expect);
      }
  }
}

TEST_CASE("p = 0 transformation coefficients for A-type") {
  // sum_h d_h w^{-h m} = (-1)^N for every m in Nar when p = |Nar| - nu = 0
  for (long d = 2; d <= 12; ++d) {
    auto ws = make_weight_system(d, {1});
    REQUIRE(static_cast<long>(ws.nar.size()) == ws.nu);
    auto dh = stokes_coefficients(ws);
    for (long m : ws.nar) {
      Cyclotomic acc(d);
      for (long h = 1; h <= ws.nu; ++h)
        acc += Cyclotomic::root_of_unity(d, -h * m) *
               Rational(dh[static_cast<size_t>(h - 1)]);
      CHECK(acc == Cyclotomic(d, Rational(-1)));
    }
  }
}

TEST_CASE("PV route agrees with the combinatorial Gram matrix") {
  // Gram built from a(n) equals the PV pairing of Chern characters; the two
  // routes are independent implementations.
  for (const char* txt : {"9;2,3", "12;4,3", "8;1,4"}) {
    auto ws = parse_weight_system(txt);
    auto M = gram_matrix(ws);
    for (long i = 0; i < ws.nu; ++i) {
      for (long j = 0; j < ws.nu; ++j) {
        // collection (C(0)^st, C(-1)^st, ..., C(1-nu)^st); entry (i,j) pairs
        // the i-th against the j-th object
        auto chi = pv_pairing(chern_stab(ws, -i), chern_stab(ws, -j));
        REQUIRE(chi.is_rational());
        CHECK(chi.rational_part() == Rational(M[static_cast<size_t>(i)][static_cast<size_t>(j)]));
      }
    }
  }
}
