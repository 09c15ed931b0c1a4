#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "degenlab/super_algebra.hpp"

using namespace degenlab;

namespace {

SuperAlgebra s3_7() {
  return algebra_from_products(1, 2, "S_7^3",
                               {{"e1.e1", {{"e1", "1"}}},
                                {"e1.f1", {{"f1", "1/2"}}},
                                {"e1.f2", {{"f2", "1/2"}}},
                                {"f1.f2", {{"e1", "1"}}}});
}

SuperAlgebra s3_5() {
  return algebra_from_products(1, 2, "S_5^3",
                               {{"e1.e1", {{"e1", "1"}}},
                                {"e1.f1", {{"f1", "1/2"}}},
                                {"e1.f2", {{"f2", "1/2"}}}});
}

SuperAlgebra s3_3() {
  return algebra_from_products(1, 2, "S_3^3", {{"e1.f1", {{"f2", "1"}}}});
}

SuperAlgebra s3_2() {
  return algebra_from_products(1, 2, "S_2^3", {{"f1.f2", {{"e1", "1"}}}});
}

SuperAlgebra s2_2_12() {
  return algebra_from_products(1, 2, "S_2^2",
                               {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", "1"}}}});
}

QVector unit(int dim, int i) {
  QVector v = QVector::Zero(dim);
  v[i] = Rational(1);
  return v;
}

std::mt19937_64 rng(424242);

RationalBasisChange random_graded_change(int m, int n) {
  std::uniform_int_distribution<long long> num(-3, 3);
  std::uniform_int_distribution<long long> den(1, 2);
  auto random_invertible = [&](int d) {
    QMatrix g(d, d);
    while (true) {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Rational(num(rng), den(rng));
      if (!determinant(g).is_zero()) return g;
    }
  };
  return {random_invertible(m), random_invertible(n)};
}

}  // namespace

TEST_CASE("supercommutative completion fills mirror products") {
  SuperAlgebra a = s3_7();
  CHECK(a.gamma(0, 0, 0) == Rational(1, 2));  // f1 e1 = 1/2 f1
  CHECK(a.delta(1, 0, 0) == Rational(-1));    // f2 f1 = -e1
  CHECK(is_supercommutative(a));

  SuperAlgebra raw = algebra_from_products(1, 2, "", {{"e1.f1", {{"f1", "1"}}}},
                                           /*complete=*/false);
  CHECK_FALSE(is_supercommutative(raw));  // beta set, gamma missing
}

TEST_CASE("product on basis and zero vectors") {
  SuperAlgebra a = s3_7();
  // f1 f2 = e1
  CHECK(basis_product(a, 1, 2) == unit(3, 0));
  // x * 0 = 0
  QVector x(3);
  x << Rational(2), Rational(1, 3), Rational(-1);
  CHECK(product(a, x, QVector::Zero(3)) == QVector::Zero(3));
  // e1 f2 = 1/2 f2 in S_5^3
  QVector half_f2 = QVector::Zero(3);
  half_f2[2] = Rational(1, 2);
  CHECK(basis_product(s3_5(), 0, 2) == half_f2);
  CHECK_THROWS_AS(product(a, QVector::Zero(2), QVector::Zero(3)), Error);
}

TEST_CASE("change_basis follows the conjugation convention") {
  SuperAlgebra u1 = algebra_from_products(1, 0, "U_1^s", {{"e1.e1", {{"e1", "1"}}}});
  RationalBasisChange doubling{QMatrix(1, 1), QMatrix(0, 0)};
  doubling.even(0, 0) = Rational(2);
  SuperAlgebra conj = change_basis(u1, doubling);
  CHECK(conj.alpha(0, 0, 0) == Rational(1, 2));

  // identity map keeps the structure
  RationalBasisChange id{QMatrix::Identity(1, 1), QMatrix::Identity(2, 2)};
  CHECK(change_basis(s3_7(), id).same_structure(s3_7()));

  // odd swap on S_3^3 turns e1 f1 = f2 into e1 f2 = f1
  RationalBasisChange swap{QMatrix::Identity(1, 1), QMatrix::Zero(2, 2)};
  swap.odd(0, 1) = Rational(1);
  swap.odd(1, 0) = Rational(1);
  SuperAlgebra swapped = change_basis(s3_3(), swap);
  SuperAlgebra expected = algebra_from_products(1, 2, "", {{"e1.f2", {{"f1", "1"}}}});
  CHECK(swapped.same_structure(expected));

  RationalBasisChange singular{QMatrix::Zero(1, 1), QMatrix::Identity(2, 2)};
  CHECK_THROWS_AS(change_basis(s3_3(), singular), Error);
}

TEST_CASE("change_basis is a left group action") {
  SuperAlgebra a = s3_7();
  for (int trial = 0; trial < 25; ++trial) {
    RationalBasisChange g = random_graded_change(1, 2);
    RationalBasisChange h = random_graded_change(1, 2);
    RationalBasisChange hg{QMatrix(h.even * g.even), QMatrix(h.odd * g.odd)};
    CHECK(change_basis(change_basis(a, g), h).same_structure(change_basis(a, hg)));
  }
}

TEST_CASE("power profiles") {
  CHECK(power_profile(s3_3(), 3) == PowerProfile{{1, 2}, {0, 1}, {0, 0}});
  CHECK(power_profile(zero_algebra(1, 2), 3) ==
        PowerProfile{{1, 2}, {0, 0}, {0, 0}});
  CHECK(power_profile(s3_2(), 3) == PowerProfile{{1, 2}, {1, 0}, {0, 0}});
  CHECK(power_profile(s3_7(), 4) == PowerProfile{{1, 2}, {1, 2}, {1, 2}, {1, 2}});

  // invariance under graded basis change
  for (int trial = 0; trial < 10; ++trial) {
    RationalBasisChange g = random_graded_change(1, 2);
    CHECK(power_profile(change_basis(s3_2(), g), 4) == power_profile(s3_2(), 4));
    CHECK(power_profile(change_basis(s3_3(), g), 4) == power_profile(s3_3(), 4));
  }
}

TEST_CASE("even part") {
  SuperAlgebra s13 = algebra_from_products(2, 1, "S_13^3",
                                           {{"e1.e1", {{"e1", "1"}}},
                                            {"e2.e2", {{"e2", "1"}}},
                                            {"e1.f1", {{"f1", "1/2"}}},
                                            {"e2.f1", {{"f1", "1/2"}}}});
  SuperAlgebra even = even_part(s13);
  CHECK(even.m == 2);
  CHECK(even.n == 0);
  SuperAlgebra two_idem = algebra_from_products(
      2, 0, "", {{"e1.e1", {{"e1", "1"}}}, {"e2.e2", {{"e2", "1"}}}});
  CHECK(even.same_structure(two_idem));

  CHECK(even_part(s3_3()).same_structure(zero_algebra(1, 0)));

  SuperAlgebra b2 = algebra_from_products(
      2, 1, "B_2^s", {{"e1.e1", {{"e1", "1"}}}, {"e1.e2", {{"e2", "1/2"}}}});
  SuperAlgebra b2_even = algebra_from_products(
      2, 0, "", {{"e1.e1", {{"e1", "1"}}}, {"e1.e2", {{"e2", "1/2"}}}});
  CHECK(even_part(b2).same_structure(b2_even));
}

TEST_CASE("annex") {
  SuperAlgebra a7 = annex(s3_7());
  CHECK(a7.same_structure(algebra_from_products(1, 2, "", {{"f1.f2", {{"e1", "1"}}}})));
  CHECK(annex(s2_2_12()).same_structure(zero_algebra(1, 2)));
  CHECK(annex(s3_2()).same_structure(s3_2()));
  // a(a(J)) = a(J), and the even part of a(J) is a zero algebra
  CHECK(annex(annex(s3_7())).same_structure(annex(s3_7())));
  CHECK(even_part(annex(s3_7())).same_structure(zero_algebra(1, 0)));
}

TEST_CASE("direct sum") {
  SuperAlgebra s12_11 = algebra_from_products(
      1, 1, "S_1^2", {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", "1/2"}}}});
  SuperAlgebra u1 = algebra_from_products(1, 0, "U_1^s", {{"e1.e1", {{"e1", "1"}}}});
  SuperAlgebra sum = direct_sum(s12_11, u1);
  SuperAlgebra expected = algebra_from_products(2, 1, "",
                                                {{"e1.e1", {{"e1", "1"}}},
                                                 {"e2.e2", {{"e2", "1"}}},
                                                 {"e1.f1", {{"f1", "1/2"}}}});
  CHECK(sum.same_structure(expected));

  CHECK(direct_sum(s3_7(), zero_algebra(0, 0)).same_structure(s3_7()));

  SuperAlgebra two_u1 = direct_sum(u1, u1);
  CHECK(two_u1.same_structure(algebra_from_products(
      2, 0, "", {{"e1.e1", {{"e1", "1"}}}, {"e2.e2", {{"e2", "1"}}}})));

  // (J (+) K)^r dims add componentwise
  auto pa = power_profile(s12_11, 4);
  auto pb = power_profile(u1, 4);
  auto ps = power_profile(sum, 4);
  for (size_t r = 0; r < ps.size(); ++r) {
    CHECK(ps[r].first == pa[r].first + pb[r].first);
    CHECK(ps[r].second == pa[r].second + pb[r].second);
  }
}

TEST_CASE("forget grading") {
  SuperAlgebra s13 = algebra_from_products(2, 1, "S_13^3",
                                           {{"e1.e1", {{"e1", "1"}}},
                                            {"e2.e2", {{"e2", "1"}}},
                                            {"e1.f1", {{"f1", "1/2"}}},
                                            {"e2.f1", {{"f1", "1/2"}}}});
  SuperAlgebra flat = forget_grading(s13);
  CHECK(flat.m == 3);
  CHECK(flat.n == 0);
  SuperAlgebra expected = algebra_from_products(3, 0, "",
                                                {{"e1.e1", {{"e1", "1"}}},
                                                 {"e2.e2", {{"e2", "1"}}},
                                                 {"e1.e3", {{"e3", "1/2"}}},
                                                 {"e2.e3", {{"e3", "1/2"}}}});
  CHECK(flat.same_structure(expected));
  CHECK(is_supercommutative(flat));  // plain commutativity for n = 0

  CHECK(forget_grading(zero_algebra(2, 1)).same_structure(zero_algebra(3, 0)));
  CHECK_THROWS_AS(forget_grading(s3_2()), Error);
}

TEST_CASE("is_supercommutative rejections") {
  CHECK(is_supercommutative(s3_7()));
  CHECK(is_supercommutative(s2_2_12()));
  // symmetric delta: f1 f2 = e1 = f2 f1
  SuperAlgebra bad = algebra_from_products(
      1, 2, "", {{"f1.f2", {{"e1", "1"}}}, {"f2.f1", {{"e1", "1"}}}},
      /*complete=*/false);
  CHECK_FALSE(is_supercommutative(bad));
  // beta without gamma
  SuperAlgebra bad2 = algebra_from_products(1, 1, "", {{"e1.f1", {{"f1", "1"}}}},
                                            /*complete=*/false);
  CHECK_FALSE(is_supercommutative(bad2));
  // supercommutativity is preserved by change_basis
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(is_supercommutative(change_basis(s3_7(), random_graded_change(1, 2))));
  }
}

TEST_CASE("products_of round trip") {
  SuperAlgebra a = s3_7();
  SuperAlgebra again = algebra_from_products(1, 2, a.name, products_of(a));
  CHECK(again.same_structure(a));
}
