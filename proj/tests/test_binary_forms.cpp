#include <doctest.h>

#include <random>

#include "orbitlab/binary_forms.hpp"
#include "reference_impls.hpp"

using namespace orbitlab;
using namespace orbitlab::forms;

namespace {

BinaryForm random_form(std::mt19937_64& rng, int n) { return BinaryForm(testref::random_coeffs(rng, n)); }

Matrix2 random_sl2(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-6, 6);
  Rational p;
  do p = dist(rng);
  while (p == 0);
  const Rational q = dist(rng), r = dist(rng);
  return Matrix2{p, q, r, (1 + q * r) / p};
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(30, 15) == 155117520);
}

TEST_CASE("transvectant agrees with the differential operator definition") {
  std::mt19937_64 rng(7);
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; q <= 6; ++q)
      for (int r = 0; r <= std::min(p, q); ++r) {
        const auto A = random_form(rng, p), B = random_form(rng, q);
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(r);
        CHECK(transvectant(A, B, r).coeffs == testref::transvectant_by_derivatives(A.coeffs, B.coeffs, r));
      }
}

TEST_CASE("transvectant edge cases") {
  const BinaryForm A({1, 2, 3}), B({4, 5});
  CHECK_THROWS_AS(transvectant(A, B, 2), OrderTooSmall);
  CHECK_THROWS_AS(transvectant(A, B, -1), OrderTooSmall);
  CHECK(product(A, B) == transvectant(A, B, 0));
  CHECK(transvectant(A, B, 1).order() == 1);
  // x1^2 and x2^2 are not apolar: (x1^2, x2^2)_2 = 1
  CHECK(transvectant(BinaryForm({1, 0, 0}), BinaryForm({0, 0, 1}), 2) == BinaryForm({1}));
}

TEST_CASE("transvectant in positive characteristic") {
  const std::uint64_t p = 11;
  auto fp = [&](std::vector<long> v) {
    std::vector<Fp> c;
    for (long x : v) c.emplace_back(x, p);
    return FpForm(std::move(c));
  };
  const auto A = fp({1, 2, 3, 4}), B = fp({5, 6, 7});
  const auto T = transvectant(A, B, 1);
  const auto R = transvectant(BinaryForm({1, 2, 3, 4}), BinaryForm({5, 6, 7}), 1);
  for (int i = 0; i <= T.order(); ++i) {
    const Rational x = R[i];
    const Fp expected = Fp(x.get_num().get_si(), p) / Fp(x.get_den().get_si(), p);
    CHECK(T[i] == expected);
  }
  CHECK_THROWS_AS(transvectant(fp({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), fp({1, 1}), 1), NonInvertibleFactorial);
}

TEST_CASE("substitution matches direct expansion") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 7; ++n) {
    const auto A = random_form(rng, n);
    const Rational p = 3, q = -2, r = 5, s = Rational(1, 2);
    CHECK(substitute_coefficients(A.coeffs, p, q, r, s) == testref::substitute_by_expansion(A.coeffs, p, q, r, s));
    CHECK(substitute_monomial_coefficients(testref::to_raw(A.coeffs), p, q, r, s) ==
          testref::to_raw(testref::substitute_by_expansion(A.coeffs, p, q, r, s)));
  }
}

TEST_CASE("monomial substitution in characteristic 5 keeps the middle terms") {
  // x1^5 + x2^5 under x1 -> x1 + x2, x2 -> x2 is (x1 + x2)^5 + x2^5 = x1^5 + 2 x2^5 mod 5
  const std::vector<Fp> c{Fp(1, 5), Fp(0, 5), Fp(0, 5), Fp(0, 5), Fp(0, 5), Fp(1, 5)};
  const auto out = substitute_monomial_coefficients(c, Fp(1, 5), Fp(1, 5), Fp(0, 5), Fp(1, 5));
  CHECK(out[0].value() == 1);
  for (int k = 1; k < 5; ++k) CHECK(out[k].value() == 0);
  CHECK(out[5].value() == 2);
  // x1^4 x2 -> (x1 + x2)^4 x2 has all coefficients binom(4, k) != 0 mod 5
  const std::vector<Fp> e{Fp(0, 5), Fp(1, 5), Fp(0, 5), Fp(0, 5), Fp(0, 5), Fp(0, 5)};
  const auto f = substitute_monomial_coefficients(e, Fp(1, 5), Fp(1, 5), Fp(0, 5), Fp(1, 5));
  CHECK(f[1].value() == 1);
  CHECK(f[2].value() == 4);
  CHECK(f[3].value() == 1);
  CHECK(f[4].value() == 4);
  CHECK(f[5].value() == 1);
}

TEST_CASE("SL2 action") {
  std::mt19937_64 rng(3);
  const auto A = random_form(rng, 4);
  CHECK(sl2_substitute(A, Matrix2{1, 0, 0, 1}) == A);
  CHECK_THROWS_AS(sl2_substitute(A, Matrix2{2, 0, 0, 1}), NotUnimodular);
  // torus diag(t, 1/t) scales a_i by t^(n-2i)
  const Rational t = 3;
  const auto T = sl2_substitute(A, Matrix2{t, 0, 0, 1 / t});
  for (int i = 0; i <= 4; ++i) {
    Rational f = 1;
    for (int k = 0; k < std::abs(4 - 2 * i); ++k) f *= (4 - 2 * i > 0 ? t : 1 / t);
    CHECK(T[i] == A[i] * f);
  }
}

TEST_CASE("covariant expressions") {
  using covariants::hessian;
  CHECK(hessian().degree() == 2);
  CHECK(hessian().order(6) == 8);
  CHECK(covariants::quintic_C().degree() == 12);
  CHECK(covariants::quintic_C().order(5) == 0);
  CHECK(covariants::septimic_delta().order(7) == 6);
  CHECK_THROWS_AS(covariants::g2().order(3), OrderTooSmall);
  CHECK_THROWS_AS(evaluate_covariant(covariants::g2(), 3), OrderTooSmall);
  CHECK(hessian().to_string() == "(F, F)_2");

  const auto g2 = evaluate_covariant(covariants::g2(), 4);
  REQUIRE(g2.order() == 0);
  CHECK(g2[0].to_string() == "2*a_0*a_4 - 8*a_1*a_3 + 6*a_2^2");
}

TEST_CASE("invariants are SL2-invariant") {
  std::mt19937_64 rng(5);
  const Poly g2 = evaluate_covariant(covariants::g2(), 4)[0];
  const Poly g3 = evaluate_covariant(covariants::g3(), 4)[0];
  for (int trial = 0; trial < 5; ++trial) {
    const auto E = random_form(rng, 4);
    const auto F = sl2_substitute(E, random_sl2(rng));
    CHECK(theta(g2, E) == theta(g2, F));
    CHECK(theta(g3, E) == theta(g3, F));
  }
}

TEST_CASE("quartic defining equation") {
  std::mt19937_64 rng(9);
  const auto E = random_form(rng, 4);
  const Poly eq = quartic_defining_equation(E);
  CHECK(eq.degree() == 6);
  CHECK(eq.is_homogeneous());
  CHECK(theta(eq, E) == 0);
  CHECK(theta(eq, sl2_substitute(E, random_sl2(rng))) == 0);
  CHECK_THROWS_AS(quartic_defining_equation(BinaryForm({1, 0, 0, 0, 0})), DegenerateForm);
  CHECK_THROWS_AS(quartic_defining_equation(BinaryForm({1, 0, 0})), DimensionMismatch);
}

TEST_CASE("quintic generators") {
  const BinaryForm E({3, -1, 4, 1, -5, 9});
  const auto g = quintic_generators(E);
  CHECK(g.z8.degree() == 8);
  CHECK(g.z12.degree() == 12);
  CHECK(g.z8.is_homogeneous());
  CHECK(theta(g.z8, E) == 0);
  CHECK(theta(g.z12, E) == 0);
}

TEST_CASE("form literals") {
  const auto f = parse_form("1, 0,-3, 1/2");
  CHECK(f.order() == 3);
  CHECK(f[3] == Rational(1, 2));
  CHECK(format_form(f) == "1,0,-3,1/2");
  CHECK_THROWS_AS(parse_form("1,x"), ParseError);
}

TEST_CASE("prime field scalars") {
  const Fp a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 1);
  CHECK((a / b * b) == a);
  CHECK((-a).value() == 4);
  CHECK_THROWS_AS(a + Fp(1, 11), DimensionMismatch);
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967297ULL));
}
