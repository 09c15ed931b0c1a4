#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "degenlab/catalog.hpp"
#include "degenlab/identities.hpp"

using namespace degenlab;

namespace {

std::mt19937_64 rng(1729);

RationalBasisChange random_graded_change(int m, int n) {
  std::uniform_int_distribution<long long> num(-3, 3);
  std::uniform_int_distribution<long long> den(1, 2);
  auto random_invertible = [&](int d) {
    QMatrix g(d, d);
    while (true) {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Rational(num(rng), den(rng));
      if (d == 0 || !determinant(g).is_zero()) return g;
    }
  };
  return {random_invertible(m), random_invertible(n)};
}

}  // namespace

TEST_CASE("grassmann product sign conventions") {
  auto xi = [](int i) {
    return GrassmannElement::monomial(static_cast<uint8_t>(1u << (i - 1)));
  };
  // (xi1 xi2) xi3 = xi1 xi2 xi3
  GrassmannElement x12 = xi(1) * xi(2);
  CHECK((x12 * xi(3)) == GrassmannElement::monomial(0b111));
  // xi1 xi1 = 0
  CHECK((xi(1) * xi(1)).is_zero());
  // xi3 xi1 = -xi1 xi3
  CHECK((xi(3) * xi(1)) == GrassmannElement::monomial(0b101, Rational(-1)));
  CHECK(grassmann_sign(0b001, 0b100) == 1);
  CHECK(grassmann_sign(0b100, 0b001) == -1);
  CHECK(grassmann_sign(0b001, 0b001) == 0);
}

TEST_CASE("tagged embed parity rule") {
  const SuperAlgebra& s23 = catalog_get("S_2^3").algebra;
  EnvelopeElement even = tagged_embed(s23, 0, 1);
  REQUIRE(even.terms().size() == 1);
  CHECK(even.terms().begin()->first.first == 0b11);  // xi1 xi2
  EnvelopeElement odd2 = tagged_embed(s23, 1, 2);
  CHECK(odd2.terms().begin()->first.first == 0b0100);  // xi3
  EnvelopeElement odd4 = tagged_embed(s23, 2, 4);
  CHECK(odd4.terms().begin()->first.first == 0b01000000);  // xi7
  CHECK_THROWS_AS(tagged_embed(s23, 0, 5), Error);
  CHECK_THROWS_AS(tagged_embed(s23, 7, 1), Error);
}

TEST_CASE("every catalog algebra is a Jordan superalgebra") {
  for (const auto& e : catalog_entries()) {
    IdentityReport r = check_jordan_super(e.algebra);
    INFO("entry ", e.name);
    CHECK(r.pass);
  }
}

TEST_CASE("Peirce eigenvalue law on a single idempotent") {
  // e e = e, e f = lambda f passes iff lambda in {0, 1/2, 1}.
  auto probe = [](const Rational& lambda) {
    SuperAlgebra a = algebra_from_products(
        1, 1, "probe",
        {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", lambda.str()}}}});
    return check_jordan_super(a);
  };
  CHECK(probe(Rational(0)).pass);
  CHECK(probe(Rational(1, 2)).pass);
  CHECK(probe(Rational(1)).pass);
  for (Rational bad : {Rational(1, 4), Rational(1, 3), Rational(2, 3)}) {
    IdentityReport r = probe(bad);
    INFO("lambda = ", bad.str());
    CHECK_FALSE(r.pass);
    CHECK(r.kind == IdentityReport::WitnessKind::JordanResidual);
    // The stored witness re-evaluates to the same nonzero residual.
    SuperAlgebra a = algebra_from_products(
        1, 1, "probe",
        {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", bad.str()}}}});
    CHECK(reevaluate_jordan_witness(a, r));
  }
}

TEST_CASE("supercommutativity failure is reported with a witness") {
  SuperAlgebra sym_delta = algebra_from_products(
      1, 2, "", {{"f1.f2", {{"e1", "1"}}}, {"f2.f1", {{"e1", "1"}}}},
      /*complete=*/false);
  IdentityReport r = check_jordan_super(sym_delta);
  CHECK_FALSE(r.pass);
  CHECK(r.kind == IdentityReport::WitnessKind::Supercommutativity);
}

TEST_CASE("S_2^2 variant with eigenvalue 1/3 fails with a residual") {
  SuperAlgebra bad = algebra_from_products(
      1, 2, "", {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", "1/3"}}}});
  IdentityReport r = check_jordan_super(bad);
  CHECK_FALSE(r.pass);
  CHECK(r.kind == IdentityReport::WitnessKind::JordanResidual);
  CHECK(reevaluate_jordan_witness(bad, r));
}

TEST_CASE("zero algebra passes") {
  CHECK(check_jordan_super(zero_algebra(1, 2)).pass);
  CHECK(check_jordan_super(zero_algebra(0, 3)).pass);
}

TEST_CASE("associativity matches the catalog type column") {
  for (const auto& e : catalog_entries()) {
    INFO("entry ", e.name);
    CHECK(check_associative(e.algebra).associative == e.expected_associative);
  }
  // S_1^2 witness: (e1 e1) f1 = 1/2 f1 vs e1 (e1 f1) = 1/4 f1.
  AssociativityReport r = check_associative(catalog_get("S_1^2", {{1, 2}}).algebra);
  REQUIRE(r.witness.has_value());
  CHECK((*r.witness) == std::array<int, 3>{0, 0, 1});
}

TEST_CASE("Jordan verdict is invariant under graded basis changes") {
  for (const char* name : {"S_7^3", "S_8^3", "S_1^3"}) {
    const SuperAlgebra& a = catalog_get(name).algebra;
    for (int trial = 0; trial < 5; ++trial) {
      SuperAlgebra conj = change_basis(a, random_graded_change(a.m, a.n));
      CHECK(check_jordan_super(conj).pass);
    }
  }
  // and a non-Jordan algebra stays non-Jordan
  SuperAlgebra bad = algebra_from_products(
      1, 2, "", {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", "1/3"}}}});
  for (int trial = 0; trial < 5; ++trial) {
    SuperAlgebra conj = change_basis(bad, random_graded_change(1, 2));
    CHECK_FALSE(check_jordan_super(conj).pass);
  }
}
