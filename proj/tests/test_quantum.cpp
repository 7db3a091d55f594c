#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lgspectra/quantum.hpp"

using namespace lgs;

namespace {
const long kPrec = 128;

Rational at(const QuantumAlgebra& qa, long i, long j) {
  return qa.matX[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

// Bareiss determinant oracle, independent of Faddeev-LeVerrier
Rational det_oracle(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  Rational sign(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      sign = -sign;
    }
    for (size_t row = col + 1; row < n; ++row) {
      Rational f = a[row][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  Rational det = sign;
  for (size_t i = 0; i < n; ++i) det *= a[i][i];
  return det;
}

Real abs_real(const QuantumAlgebra& qa, long prec) {
  return principal_T(qa.ws, prec);
}

}  // namespace

TEST_CASE("E7 multiplication matrix is the displayed fixture") {
  auto qa = build_quantum_algebra(FamilySpec::e7());
  REQUIRE(qa.dim() == 7);
  CHECK(qa.basis_labels ==
        std::vector<std::string>{"e1", "e2", "e4", "e5", "e7", "e8", "e0"});
  CHECK(at(qa, 0, 4) == Rational(1, 27));
  CHECK(at(qa, 1, 0) == Rational(1));
  CHECK(at(qa, 1, 5) == Rational(1, 27));
  CHECK(at(qa, 2, 1) == Rational(1, 3));
  CHECK(at(qa, 3, 1) == Rational(1, 27));
  CHECK(at(qa, 4, 2) == Rational(1, 27));
  CHECK(at(qa, 4, 3) == Rational(1, 3));
  CHECK(at(qa, 5, 4) == Rational(1));
  for (long i = 0; i < 7; ++i) CHECK(at(qa, i, 6).is_zero());  // e0 column
  for (long j = 0; j < 7; ++j) CHECK(at(qa, 6, j).is_zero());  // e0 row
}

TEST_CASE("A-type companion") {
  auto qa = build_quantum_algebra(FamilySpec::a_type(4));  // x^5, (5;1)
  REQUIRE(qa.dim() == 4);
  CHECK(at(qa, 0, 3) == Rational(1, 5));
  CHECK(at(qa, 1, 0) == Rational(1));
  CHECK(qa.scale == Rational(4, 5));

  auto a1 = build_quantum_algebra(FamilySpec::a_type(1));  // x^2
  REQUIRE(a1.dim() == 1);
  CHECK(at(a1, 0, 0) == Rational(1, 2));
  CHECK(a1.scale == Rational(1, 2));
}

TEST_CASE("Fermat companion and broad dimensions") {
  auto qa = build_quantum_algebra(FamilySpec::fermat(7, 3));
  REQUIRE(qa.dim() == 6);
  CHECK(at(qa, 2, 5) == Rational(1, 343));  // X^6 = 7^-3 X^2
  CHECK(qa.broad_zero_count == fermat_broad_dimension(qa.ws));
  CHECK_FALSE(qa.subspace_only);

  CHECK(fermat_broad_dimension(parse_weight_system("5;1,1,1")) == 12);
  CHECK(fermat_broad_dimension(parse_weight_system("9;1")) == 0);
  CHECK(fermat_broad_dimension(parse_weight_system("4;1,1")) == 3);

  auto nu1 = build_quantum_algebra(FamilySpec::fermat(4, 3));
  CHECK(nu1.subspace_only);
  CHECK(nu1.broad_zero_count == 0);
}

TEST_CASE("characteristic polynomial") {
  // A-type: lambda^4 - 1/5 for the (5;1) companion
  auto qa = build_quantum_algebra(FamilySpec::a_type(4));
  Poly p = char_poly(qa);
  REQUIRE(poly_degree(p) == 4);
  CHECK(p[0] == Rational(-1, 5));
  CHECK(p[1].is_zero());
  CHECK(p[2].is_zero());
  CHECK(p[3].is_zero());
  CHECK(p[4] == Rational(1));

  // E7: lambda^3 (lambda^4 - 4/2187)
  Poly e7 = char_poly(build_quantum_algebra(FamilySpec::e7()));
  Poly expect(8, Rational(0));
  expect[7] = 1;
  expect[3] = Rational(-4, 2187);
  CHECK(e7 == expect);

  // zero matrix -> lambda^n
  std::vector<std::vector<Rational>> z(3, std::vector<Rational>(3, Rational(0)));
  Poly pz = char_poly(z);
  CHECK(pz == Poly{Rational(0), Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("char_poly oracle: companions and random matrices") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> coef(-6, 6), den(1, 4);
  for (int trial = 0; trial < 12; ++trial) {
    long deg = 2 + static_cast<long>(rng() % 7);  // up to 8
    Poly f(static_cast<size_t>(deg) + 1);
    for (long i = 0; i < deg; ++i) f[static_cast<size_t>(i)] = Rational(coef(rng), den(rng));
    f[static_cast<size_t>(deg)] = 1;
    // companion of monic f
    std::vector<std::vector<Rational>> C(static_cast<size_t>(deg),
                                         std::vector<Rational>(static_cast<size_t>(deg)));
    for (long i = 1; i < deg; ++i) C[static_cast<size_t>(i)][static_cast<size_t>(i - 1)] = 1;
    for (long i = 0; i < deg; ++i)
      C[static_cast<size_t>(i)][static_cast<size_t>(deg - 1)] = -f[static_cast<size_t>(i)];
    CHECK(char_poly(C) == f);
  }

  // cross-check char_poly values against a Bareiss determinant at random points
  for (int trial = 0; trial < 6; ++trial) {
    long n = 2 + static_cast<long>(rng() % 4);
    std::vector<std::vector<Rational>> A(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n)));
    for (auto& row : A)
      for (auto& x : row) x = Rational(coef(rng), den(rng));
    Poly p = char_poly(A);
    for (long probe = 0; probe < 3; ++probe) {
      Rational lam(coef(rng), den(rng));
      auto shifted = A;
      for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j)
          shifted[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              -A[static_cast<size_t>(i)][static_cast<size_t>(j)];
        shifted[static_cast<size_t>(i)][static_cast<size_t>(i)] += lam;
      }
      CHECK(poly_eval(p, lam) == det_oracle(shifted));
    }
  }
}

TEST_CASE("eigenvalues against closed forms") {
  // A (5;1): (4/5)(1/5)^{1/4} i^j, multiplicity one each
  auto qa = build_quantum_algebra(FamilySpec::a_type(4));
  auto eig = eigenvalues(qa, kPrec);
  REQUIRE(eig.size() == 4);
  Real t = abs_real(qa, kPrec);
  for (const auto& ev : eig) {
    CHECK(ev.multiplicity == 1);
    CHECK((ev.value.abs() - t).abs() <= t * pow2(-kPrec + 32, kPrec));
  }

  // E6: {0} plus (5/12)(1/5184)^{1/5} zeta_5^j
  auto e6 = build_quantum_algebra(FamilySpec::e6());
  auto eig6 = eigenvalues(e6, kPrec);
  long zero_mult = 0;
  long unit_count = 0;
  Real t6 = abs_real(e6, kPrec);
  for (const auto& ev : eig6) {
    if (ev.value.abs() <= pow2(-kPrec / 2, kPrec)) {
      zero_mult += ev.multiplicity;
    } else {
      ++unit_count;
      CHECK((ev.value.abs() - t6).abs() <= t6 * pow2(-kPrec + 32, kPrec));
    }
  }
  CHECK(zero_mult == 1);
  CHECK(unit_count == 5);

  // Fermat(7,3): zeros of multiplicity 2 + broad, then 4 7^{-7/4} i^j
  auto f = build_quantum_algebra(FamilySpec::fermat(7, 3));
  auto eigf = eigenvalues(f, kPrec);
  long zf = 0;
  for (const auto& ev : eigf)
    if (ev.value.abs() <= pow2(-kPrec / 2, kPrec)) zf += ev.multiplicity;
  CHECK(zf == 2 + f.broad_zero_count);
}

TEST_CASE("eigenvalue bookkeeping matches the declared dimension") {
  for (auto spec : {FamilySpec::e7(), FamilySpec::dt(4), FamilySpec::fermat(7, 3),
                    FamilySpec::a_type(5), FamilySpec::e8()}) {
    auto qa = build_quantum_algebra(spec);
    auto eig = eigenvalues(qa, kPrec);
    long total = 0;
    for (const auto& ev : eig) total += ev.multiplicity;
    CHECK(total == qa.declared_dimension());
  }
  CHECK(build_quantum_algebra(FamilySpec::e7()).declared_dimension() == 7);
  CHECK(build_quantum_algebra(FamilySpec::dt(5)).declared_dimension() == 6);
}

TEST_CASE("spectrum conjecture verdicts") {
  for (auto spec : {FamilySpec::e6(), FamilySpec::e7(), FamilySpec::e8(),
                    FamilySpec::dt(4), FamilySpec::a_type(4), FamilySpec::fermat(7, 3)}) {
    auto qa = build_quantum_algebra(spec);
    auto rep = check_spectrum_conjecture(qa, kPrec, 1e-12);
    INFO(spec.name());
    CHECK(rep.max_modulus_ok);
    CHECK(rep.root_of_unity_set_ok);
    CHECK(rep.multiplicity_one_ok);
  }

  // E7 zero multiplicity is 3
  auto e7 = build_quantum_algebra(FamilySpec::e7());
  for (const auto& ev : eigenvalues(e7, kPrec))
    if (ev.value.abs() <= pow2(-kPrec / 2, kPrec)) CHECK(ev.multiplicity == 3);

  // DT(4): eigenvalues {0,0} + 0.0744094... zeta_3^j (frozen 60-digit oracle)
  auto dt = build_quantum_algebra(FamilySpec::dt(4));
  auto rep = check_spectrum_conjecture(dt, kPrec, 1e-12);
  CHECK(rep.pass());
  Real frozen(Rational(mpz_class("744094243110093503789862018408894"),
                       mpz_class("10000000000000000000000000000000000")),
              kPrec);
  CHECK((rep.T - frozen).abs() <= Real(Rational(1, 1000000000000000000L), kPrec) * frozen);
}

TEST_CASE("quantum relations hold exactly") {
  for (auto spec : {FamilySpec::e6(), FamilySpec::e7(), FamilySpec::e8(),
                    FamilySpec::dt(3), FamilySpec::dt(4), FamilySpec::dt(7),
                    FamilySpec::a_type(1), FamilySpec::a_type(2), FamilySpec::a_type(9),
                    FamilySpec::fermat(7, 3), FamilySpec::fermat(12, 5),
                    FamilySpec::fermat(4, 3), FamilySpec::fermat(9, 8)}) {
    INFO(spec.name());
    CHECK(verify_quantum_relation(build_quantum_algebra(spec)).pass());
  }
}

TEST_CASE("scaled-eigenvalue closure under e^{2 pi i / nu}") {
  for (auto spec : {FamilySpec::e8(), FamilySpec::fermat(9, 4)}) {
    auto qa = build_quantum_algebra(spec);
    auto eig = eigenvalues(qa, kPrec);
    Real t = abs_real(qa, kPrec);
    Complex rot = exp_2pi_i(Rational(1, qa.ws.nu), kPrec);
    for (const auto& ev : eig) {
      if ((ev.value.abs() - t).abs() > t * Real(Rational(1, 1000000000), kPrec)) continue;
      Complex rotated = ev.value * rot;
      bool found = false;
      for (const auto& other : eig)
        if ((other.value - rotated).abs() <= t * Real(Rational(1, 1000000000), kPrec))
          found = true;
      CHECK(found);
    }
  }
}
