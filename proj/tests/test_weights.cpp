#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lgspectra/weights.hpp"

using namespace lgs;

TEST_CASE("parse weight systems") {
  auto ws = parse_weight_system("9;2,3");
  CHECK(ws.d == 9);
  CHECK(ws.weights == std::vector<long>{2, 3});
  CHECK(ws.nu == 4);
  CHECK(ws.c_hat == Rational(8, 9));
  CHECK(ws.nar == std::vector<long>{1, 2, 4, 5, 7, 8});

  auto a4 = parse_weight_system("5;1");
  CHECK(a4.nu == 4);
  CHECK(a4.nar == std::vector<long>{1, 2, 3, 4});

  CHECK_THROWS_AS(parse_weight_system("6;2,4"), GcdViolation);
  CHECK_THROWS_AS(parse_weight_system("6;"), EmptyWeights);
  CHECK_THROWS_AS(parse_weight_system("6,2"), ParseError);
  CHECK_THROWS_AS(parse_weight_system("x;1"), ParseError);
}

TEST_CASE("named families") {
  auto e8 = family(FamilySpec::e8());
  CHECK(e8.d == 15);
  CHECK(e8.weights == std::vector<long>{5, 3});
  CHECK(e8.nar == std::vector<long>{1, 2, 4, 7, 8, 11, 13, 14});

  auto dt4 = family(FamilySpec::dt(4));
  CHECK(dt4.d == 8);
  CHECK(dt4.weights == std::vector<long>{1, 4});
  CHECK(dt4.nar == std::vector<long>{1, 3, 5, 7});

  auto f = family(FamilySpec::fermat(7, 3));
  CHECK(f.weights == std::vector<long>{1, 1, 1});
  CHECK(f.nu == 4);

  CHECK(family(FamilySpec::a_type(4)).d == 5);  // A_4 singularity x^5
  CHECK_THROWS_AS(family(FamilySpec::dt(2)), InvalidParameter);
  CHECK_THROWS_AS(family(FamilySpec::fermat(3, 3)), InvalidParameter);

  CHECK(FamilySpec::parse("DT:5").name() == "DT:5");
  CHECK(FamilySpec::parse("Fermat:7,3").d == 7);
  CHECK_THROWS_AS(FamilySpec::parse("Q:11"), ParseError);
}

TEST_CASE("narrow index sets") {
  CHECK(family(FamilySpec::e6()).nar == std::vector<long>{1, 2, 5, 7, 10, 11});
  auto dt = family(FamilySpec::dt(6));  // (12; 1, 6): odd indices
  CHECK(dt.nar == std::vector<long>{1, 3, 5, 7, 9, 11});
  auto fermat = parse_weight_system("9;1,1");
  std::vector<long> all;
  for (long m = 1; m < 9; ++m) all.push_back(m);
  CHECK(fermat.nar == all);
}

TEST_CASE("narrow duality m <-> d-m") {
  for (const char* txt : {"9;2,3", "12;4,3", "15;5,3", "8;1,4", "7;1,1,1", "18;7,4,6", "5;1"}) {
    auto ws = parse_weight_system(txt);
    for (long m : ws.nar) CHECK(is_narrow(ws, ws.d - m));
  }
}

TEST_CASE("sector data and Hodge grading") {
  auto e7 = parse_weight_system("9;2,3");
  auto s2 = sector_data(e7, 2);
  CHECK(s2.thetas == std::vector<Rational>{Rational(4, 9), Rational(6, 9)});
  CHECK(s2.mu == Rational(1, 9));
  CHECK(s2.deg == Rational(5, 9));
  // cross-check deg = 1 - nu/d for the tau direction m=2
  CHECK(s2.deg == Rational(1) - Rational(e7.nu, e7.d));

  auto s1 = sector_data(e7, 1);
  CHECK(s1.deg == Rational(0));
  CHECK(s1.mu == -(e7.c_hat * Rational(1, 2)));

  CHECK_THROWS_AS(sector_data(e7, 3), NotNarrow);

  for (const char* txt : {"9;2,3", "12;4,3", "8;1,4", "7;1,1,1"}) {
    auto ws = parse_weight_system(txt);
    for (long m : ws.nar) CHECK(hodge_mu(ws, m) + hodge_mu(ws, ws.d - m) == Rational(0));
  }
}

TEST_CASE("Mir sets and tau coefficients") {
  auto q11 = parse_weight_system("18;7,4,6");
  CHECK(q11.nu == 1);
  auto mir = mir_set(q11);
  std::vector<long> expect;
  for (long m : q11.nar)
    if (m != 17) expect.push_back(m);
  CHECK(mir == expect);

  // Fermat d > N+1: tau(t) = t e_2
  auto f73 = parse_weight_system("7;1,1,1");
  auto tau = tau_coefficients(f73);
  REQUIRE(tau.size() == 1);
  CHECK(tau.at(2) == Rational(1));

  // Fermat d = N+1 > 2: tau(t) = t e_2 + t^d/(d! d^N) e_1
  auto f43 = parse_weight_system("4;1,1,1");
  CHECK(f43.nu == 1);
  auto tau2 = tau_coefficients(f43);
  REQUIRE(tau2.size() == 2);
  CHECK(tau2.at(2) == Rational(1));
  CHECK(tau2.at(1) == Rational(mpz_class(1), factorial(4) * 64));

  CHECK_THROWS_AS(tau_coefficients(parse_weight_system("3;1,1,1")), NotGeneralType);
}

TEST_CASE("|Nar| >= nu for general type") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> dd(2, 60), nn(1, 5);
  int accepted = 0;
  while (accepted < 100) {
    long d = dd(rng), N = nn(rng);
    std::vector<long> w(N);
    long sum = 0;
    for (auto& x : w) {
      x = 1 + static_cast<long>(rng() % d);
      sum += x;
    }
    if (sum >= d) continue;
    long g = 0;
    for (long x : w) g = std::gcd(g, x);
    if (g != 1) continue;
    auto ws = make_weight_system(d, w);
    ++accepted;
    CHECK(static_cast<long>(ws.nar.size()) >= ws.nu);
  }
}

TEST_CASE("principal eigenvalue T") {
  const long prec = 128;
  // (5;1): 4 * 5^(-5/4), frozen from an independent 60-digit oracle
  Real t = principal_T(parse_weight_system("5;1"), prec);
  Real expect(Rational(mpz_class("534992243981137619202586458606918"),
                       mpz_class("1000000000000000000000000000000000")),
              prec);
  CHECK((t - expect).abs() <= Real(Rational(1, 100000000000000000L), prec));

  // (9;2,3) equals the closed form (4/9)(4/2187)^(1/4)
  Real t7 = principal_T(parse_weight_system("9;2,3"), prec);
  Real a = Real(Rational(4, 2187), prec + 16).pow(Real(Rational(1, 4), prec + 16)) *
           Real(Rational(4, 9), prec + 16);
  CHECK((t7 - a).abs() <= t7 * pow2(-prec + 16, prec));

  // Fermat (d;1,...,1): nu * d^(-d/nu)
  auto f = parse_weight_system("7;1,1,1");
  Real tf = principal_T(f, prec);
  Real b = Real(4, prec + 16) * Real(7, prec + 16).pow(Real(Rational(-7, 4), prec + 16));
  CHECK((tf - b).abs() <= tf * pow2(-prec + 16, prec));

  CHECK_THROWS_AS(principal_T(parse_weight_system("3;1,1,1"), prec), NotGeneralType);
}
