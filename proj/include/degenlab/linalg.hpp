#pragma once

#include <Eigen/Core>
#include <vector>

#include "degenlab/errors.hpp"
#include "degenlab/rational.hpp"

namespace degenlab {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using DenseRowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using QMatrix = DenseMatrix<Rational>;
using QVector = DenseVector<Rational>;

/// Reduced row echelon basis of the row space. Deterministic: leftmost pivot,
/// first-row preference, pivots scaled to 1, zero rows dropped. The result is
/// the canonical RREF of the span, so the function is idempotent and its row
/// count is the rank.
template <class F>
DenseMatrix<F> row_space_basis(DenseMatrix<F> rows) {
  const Eigen::Index nrows = rows.rows();
  const Eigen::Index ncols = rows.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < ncols && pivot_row < nrows; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = pivot_row; r < nrows; ++r) {
      if (!(rows(r, col) == F(0))) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) rows.row(pivot_row).swap(rows.row(sel));
    F inv = F(1) / rows(pivot_row, col);
    for (Eigen::Index c = col; c < ncols; ++c) rows(pivot_row, c) = rows(pivot_row, c) * inv;
    for (Eigen::Index r = 0; r < nrows; ++r) {
      if (r == pivot_row || rows(r, col) == F(0)) continue;
      F factor = rows(r, col);
      for (Eigen::Index c = col; c < ncols; ++c)
        rows(r, c) = rows(r, c) - factor * rows(pivot_row, c);
    }
    ++pivot_row;
  }
  return rows.topRows(pivot_row);
}

/// Convenience overload taking row tuples; rejects ragged input.
QMatrix row_space_basis(const std::vector<std::vector<Rational>>& rows);

template <class F>
int rank_of(const DenseMatrix<F>& m) {
  return static_cast<int>(row_space_basis(m).rows());
}

template <class F>
int kernel_dimension(const DenseMatrix<F>& m) {
  return static_cast<int>(m.cols()) - rank_of(m);
}

/// Exact Gauss-Jordan inverse over any field scalar. Throws SingularMatrix.
template <class F>
DenseMatrix<F> inverse(const DenseMatrix<F>& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) fail("DimensionMismatch", "inverse of a non-square matrix");
  DenseMatrix<F> work(n, 2 * n);
  work.leftCols(n) = m;
  work.rightCols(n).setZero();
  for (Eigen::Index i = 0; i < n; ++i) work(i, n + i) = F(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (!(work(r, col) == F(0))) {
        sel = r;
        break;
      }
    }
    if (sel < 0) fail("SingularMatrix", "matrix is not invertible");
    if (sel != col) work.row(col).swap(work.row(sel));
    F inv = F(1) / work(col, col);
    for (Eigen::Index c = 0; c < 2 * n; ++c) work(col, c) = work(col, c) * inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || work(r, col) == F(0)) continue;
      F factor = work(r, col);
      for (Eigen::Index c = 0; c < 2 * n; ++c)
        work(r, c) = work(r, c) - factor * work(col, c);
    }
  }
  return work.rightCols(n);
}

/// Determinant by cofactor expansion; needs only ring operations, which keeps
/// it usable for Laurent-polynomial matrices (block sizes here are at most 3).
template <class R>
R determinant(const DenseMatrix<R>& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) fail("DimensionMismatch", "determinant of a non-square matrix");
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R det = R(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == R(0)) continue;
    DenseMatrix<R> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    R term = m(0, j) * determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace degenlab
