#include "degenlab/invariants.hpp"

namespace degenlab {

int derivation_dimension(const SuperAlgebra& A) {
  const int m = A.m, n = A.n, d = m + n;
  const int unknowns = m * m + n * n;
  if (unknowns == 0) return 0;

  // D(e_j) = sum_k P(k, j) e_k, D(f_q) = sum_r Q(r, q) f_r; columns of the
  // system are the elementary unknowns, rows the scalar equations
  // [D(xy) - D(x)y - x D(y)]_component over all basis pairs.
  auto apply_elementary = [&](int unknown, const QVector& v) {
    QVector out = QVector::Zero(d);
    if (unknown < m * m) {
      int k = unknown / m, j = unknown % m;
      out[k] = v[j];
    } else {
      int rest = unknown - m * m;
      int r = rest / n, q = rest % n;
      out[m + r] = v[m + q];
    }
    return out;
  };

  std::vector<std::vector<Rational>> rows(
      static_cast<size_t>(d * d * d), std::vector<Rational>(unknowns, Rational(0)));
  for (int u = 0; u < unknowns; ++u) {
    size_t row_index = 0;
    for (int x = 0; x < d; ++x) {
      QVector ex = QVector::Zero(d);
      ex[x] = Rational(1);
      QVector dx = apply_elementary(u, ex);
      for (int y = 0; y < d; ++y) {
        QVector ey = QVector::Zero(d);
        ey[y] = Rational(1);
        QVector defect = apply_elementary(u, basis_product(A, x, y));
        defect -= product(A, dx, ey);
        defect -= product(A, ex, apply_elementary(u, ey));
        for (int c = 0; c < d; ++c) rows[row_index++][static_cast<size_t>(u)] = defect[c];
      }
    }
  }
  QMatrix system = row_space_basis(rows);
  return unknowns - static_cast<int>(system.rows());
}

DenseMatrix<MultiPoly> generic_left_multiplication(const SuperAlgebra& A,
                                                   int var_base) {
  const int d = A.total_dim();
  DenseMatrix<MultiPoly> L(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) L(r, c) = MultiPoly();
  for (int s = 0; s < d; ++s) {
    MultiPoly xs = MultiPoly::variable(var_base + s);
    for (int c = 0; c < d; ++c) {
      QVector w = basis_product(A, s, c);
      for (int r = 0; r < d; ++r) {
        if (w[r].is_zero()) continue;
        L(r, c) += w[r] * xs;
      }
    }
  }
  return L;
}

namespace {

DenseMatrix<MultiPoly> matrix_power(const DenseMatrix<MultiPoly>& M, int e) {
  DenseMatrix<MultiPoly> out = M;
  for (int i = 1; i < e; ++i) out = DenseMatrix<MultiPoly>(out * M);
  return out;
}

MultiPoly trace_of(const DenseMatrix<MultiPoly>& M) {
  MultiPoly tr;
  for (Eigen::Index i = 0; i < M.rows(); ++i) tr += M(i, i);
  return tr;
}

}  // namespace

BurdeResult burde_invariant(const SuperAlgebra& A, int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4)
    fail("IndexOutOfRange", "Burde indices must lie in 1..4");
  BurdeResult result;
  result.i = i;
  result.j = j;
  const int d = A.total_dim();
  DenseMatrix<MultiPoly> Lx = generic_left_multiplication(A, 0);
  DenseMatrix<MultiPoly> Ly = generic_left_multiplication(A, d);
  DenseMatrix<MultiPoly> Lxi = matrix_power(Lx, i);
  DenseMatrix<MultiPoly> Lyj = matrix_power(Ly, j);
  MultiPoly denom = trace_of(DenseMatrix<MultiPoly>(Lxi * Lyj));
  if (denom.is_zero()) {
    result.status = BurdeResult::Status::DenominatorZero;
    return result;
  }
  MultiPoly numer = trace_of(Lxi) * trace_of(Lyj);
  if (numer.is_zero()) {
    result.status = BurdeResult::Status::NumeratorZero;
    return result;
  }
  if (auto c = constant_ratio(numer, denom)) {
    result.status = BurdeResult::Status::Defined;
    result.value = *c;
  } else {
    result.status = BurdeResult::Status::NotConstant;
  }
  return result;
}

std::string BurdeResult::str() const {
  switch (status) {
    case Status::Defined:
      return value.str();
    case Status::DenominatorZero:
      return "undefined (denominator trace vanishes)";
    case Status::NumeratorZero:
      return "undefined (numerator trace vanishes)";
    case Status::NotConstant:
      return "undefined (quotient not constant)";
  }
  return "";
}

namespace {

SubProfile sub_profile(const SuperAlgebra& A) {
  SubProfile p;
  p.power_profile = power_profile(A, 4);
  p.derivation_dim = derivation_dimension(A);
  p.associative = check_associative(A).associative;
  p.burde_11 = burde_invariant(A, 1, 1);
  p.burde_12 = burde_invariant(A, 1, 2);
  p.burde_22 = burde_invariant(A, 2, 2);
  return p;
}

}  // namespace

InvariantProfile invariant_profile(const SuperAlgebra& A) {
  InvariantProfile p;
  p.power_profile = power_profile(A, 4);
  p.derivation_dim = derivation_dimension(A);
  p.associative = check_associative(A).associative;
  p.burde_11 = burde_invariant(A, 1, 1);
  p.burde_12 = burde_invariant(A, 1, 2);
  p.burde_22 = burde_invariant(A, 2, 2);
  p.annex_power_profile = power_profile(annex(A), 4);
  p.even_part_profile = sub_profile(even_part(A));
  return p;
}

}  // namespace degenlab
