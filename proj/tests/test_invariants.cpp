#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "degenlab/catalog.hpp"
#include "degenlab/invariants.hpp"

using namespace degenlab;

namespace {

std::mt19937_64 rng(8128);

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

TEST_CASE("derivation dimensions reproduce the dim Aut columns") {
  for (const auto& e : catalog_entries()) {
    INFO("entry ", e.name);
    CHECK(derivation_dimension(e.algebra) == e.expected_aut_dim);
  }
}

TEST_CASE("derivation dimension spot values") {
  CHECK(derivation_dimension(catalog_get("U_1^s", {{1, 2}}).algebra) == 4);
  CHECK(derivation_dimension(zero_algebra(1, 2)) == 5);
  CHECK(derivation_dimension(zero_algebra(2, 1)) == 5);
  CHECK(derivation_dimension(catalog_get("S_13^3").algebra) == 1);
}

TEST_CASE("Burde values reproduce the catalog column") {
  for (const auto& e : catalog_entries()) {
    if (!e.expected_burde) continue;
    INFO("entry ", e.name);
    auto check_one = [&](int i, int j, const std::optional<Rational>& expect) {
      BurdeResult r = burde_invariant(e.algebra, i, j);
      if (expect) {
        CHECK(r.defined());
        if (r.defined()) CHECK(r.value == *expect);
      } else {
        CHECK_FALSE(r.defined());
      }
    };
    check_one(1, 1, e.expected_burde->c11);
    check_one(1, 2, e.expected_burde->c12);
    check_one(2, 2, e.expected_burde->c22);
  }
}

TEST_CASE("Burde spot values") {
  CHECK(burde_invariant(catalog_get("S_2^2", {{1, 2}}).algebra, 1, 1).value ==
        Rational(2));
  CHECK(burde_invariant(catalog_get("S_4^3").algebra, 1, 1).value ==
        Rational(25, 9));
  CHECK(burde_invariant(catalog_get("S_4^3").algebra, 1, 2).value ==
        Rational(45, 17));
  CHECK(burde_invariant(catalog_get("S_1^2", {{1, 2}}).algebra, 1, 1).value ==
        Rational(9, 5));
  CHECK(burde_invariant(catalog_get("S_6^3").algebra, 1, 1).value == Rational(3));

  // even part of S_13^3 (two orthogonal idempotents): quotient not constant.
  BurdeResult r = burde_invariant(even_part(catalog_get("S_13^3").algebra), 1, 1);
  CHECK(r.status == BurdeResult::Status::NotConstant);

  // S_3^3 kills both traces at every index pair.
  CHECK(burde_invariant(catalog_get("S_3^3").algebra, 1, 1).status ==
        BurdeResult::Status::DenominatorZero);

  // S_1^3 has vanishing trace but nonvanishing denominator at (1,1).
  CHECK(burde_invariant(catalog_get("S_1^3").algebra, 1, 1).status ==
        BurdeResult::Status::NumeratorZero);
}

TEST_CASE("Burde homogeneity in the generic element") {
  // Scaling x by a formal scalar multiplies numerator and denominator by the
  // same monomial power, so the Defined value cannot change.
  const SuperAlgebra& a = catalog_get("S_7^3").algebra;
  const int d = a.total_dim();
  DenseMatrix<MultiPoly> Lx = generic_left_multiplication(a, 0);
  DenseMatrix<MultiPoly> Ly = generic_left_multiplication(a, d);
  auto trace = [](const DenseMatrix<MultiPoly>& M) {
    MultiPoly t;
    for (Eigen::Index i = 0; i < M.rows(); ++i) t += M(i, i);
    return t;
  };
  std::vector<int> xvars{0, 1, 2};
  const int scale_var = 2 * d;  // fresh symbol
  MultiPoly num = trace(Lx) * trace(Ly);
  MultiPoly den = trace(DenseMatrix<MultiPoly>(Lx * Ly));
  MultiPoly num_scaled = num.scale_variables(xvars, scale_var);
  MultiPoly den_scaled = den.scale_variables(xvars, scale_var);
  MultiPoly s = MultiPoly::variable(scale_var);
  CHECK(num_scaled == s * num);
  CHECK(den_scaled == s * den);
  CHECK(constant_ratio(num_scaled, den_scaled) == constant_ratio(num, den));
}

TEST_CASE("invariants are basis-change invariant") {
  for (const char* name : {"S_7^3", "S_2^3", "S_13^3", "B_3^s"}) {
    const CatalogEntry& e = catalog_get(name);
    InvariantProfile base = invariant_profile(e.algebra);
    for (int trial = 0; trial < 5; ++trial) {
      SuperAlgebra conj =
          change_basis(e.algebra, random_graded_change(e.algebra.m, e.algebra.n));
      CHECK(derivation_dimension(conj) == base.derivation_dim);
      CHECK(burde_invariant(conj, 1, 1) == base.burde_11);
      CHECK(burde_invariant(conj, 2, 2) == base.burde_22);
      CHECK(power_profile(conj, 4) == base.power_profile);
    }
  }
}

TEST_CASE("derivation dimension is superadditive on direct sums") {
  const SuperAlgebra& u1 = catalog_get("U_1^s", {{2, 1}}).algebra;
  const SuperAlgebra& b3 = catalog_get("B_3^s").algebra;
  SuperAlgebra sum = direct_sum(u1, b3);
  CHECK(derivation_dimension(sum) >=
        derivation_dimension(u1) + derivation_dimension(b3));
}

TEST_CASE("invariant profile assembles the pieces") {
  InvariantProfile p = invariant_profile(catalog_get("S_3^3").algebra);
  CHECK(p.power_profile == PowerProfile{{1, 2}, {0, 1}, {0, 0}, {0, 0}});
  CHECK(p.derivation_dim == 3);
  CHECK(p.associative);
  CHECK_FALSE(p.burde_11.defined());
  CHECK(p.annex_power_profile == PowerProfile{{1, 2}, {0, 0}, {0, 0}, {0, 0}});
  CHECK(p.even_part_profile.power_profile ==
        PowerProfile{{1, 0}, {0, 0}, {0, 0}, {0, 0}});

  InvariantProfile q = invariant_profile(catalog_get("S_6^3").algebra);
  CHECK(q.burde_11.defined());
  CHECK(q.burde_11.value == Rational(3));

  InvariantProfile z = invariant_profile(zero_algebra(2, 1));
  CHECK(z.derivation_dim == 5);
}
