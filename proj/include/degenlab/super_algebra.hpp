#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degenlab/linalg.hpp"
#include "degenlab/rational.hpp"
#include "degenlab/tensor3.hpp"

namespace degenlab {

/// A superalgebra of dimension (m, n) given by its m^3 + 3mn^2 structure
/// constants over the rationals, in a fixed homogeneous basis
/// e_1..e_m (even), f_1..f_n (odd):
///   e_i e_j = sum_k alpha[i,j,k] e_k     e_i f_p = sum_q beta[i,p,q] f_q
///   f_p e_i = sum_q gamma[p,i,q] f_q     f_p f_q = sum_k delta[p,q,k] e_k
struct SuperAlgebra {
  SuperAlgebra() = default;
  SuperAlgebra(int m_, int n_, std::string name_ = "")
      : m(m_), n(n_), alpha(m_, m_, m_), beta(m_, n_, n_), gamma(n_, m_, n_),
        delta(n_, n_, m_), name(std::move(name_)) {}

  int m = 0;
  int n = 0;
  Tensor3<Rational> alpha, beta, gamma, delta;
  std::string name;

  int total_dim() const { return m + n; }

  /// Structural equality: dimensions and all structure constants; names are
  /// labels, not part of the value.
  bool same_structure(const SuperAlgebra& o) const {
    return m == o.m && n == o.n && alpha == o.alpha && beta == o.beta &&
           gamma == o.gamma && delta == o.delta;
  }

  bool is_zero_algebra() const {
    return alpha.all_zero() && beta.all_zero() && gamma.all_zero() && delta.all_zero();
  }

  /// Basis label for coordinate index i (e1..em then f1..fn).
  std::string basis_label(int i) const;
};

/// The superalgebra with zero multiplication on (m, n).
SuperAlgebra zero_algebra(int m, int n, std::string name = "");

/// Invertible grading-preserving linear map, stored blockwise. Interpretation
/// depends on the operation: change_basis treats the blocks as operator
/// matrices (columns are images of basis vectors), witness transport treats
/// rows as the parametrized basis vectors in old coordinates.
template <class R>
struct GradedBasisChange {
  DenseMatrix<R> even;
  DenseMatrix<R> odd;
};

using RationalBasisChange = GradedBasisChange<Rational>;

/// Graded dimensions of the powers J^r, r = 1..r_max, where
/// J^r = J^{r-1}J + J^{r-2}J^2 + ... + J J^{r-1}.
using PowerProfile = std::vector<std::pair<int, int>>;

/// Bilinear product of coordinate vectors (length m+n, even block first).
QVector product(const SuperAlgebra& A, const QVector& x, const QVector& y);

/// Product of two basis vectors by index.
QVector basis_product(const SuperAlgebra& A, int i, int j);

/// The conjugation action nu(x, y) = g mu(g^-1 x, g^-1 y). The blocks of g
/// are operator matrices; throws SingularMatrix when a block is singular.
SuperAlgebra change_basis(const SuperAlgebra& A, const RationalBasisChange& g);

PowerProfile power_profile(const SuperAlgebra& A, int r_max = 4);

/// Restriction to the even subspace; odd data dropped.
SuperAlgebra even_part(const SuperAlgebra& A);

/// a(J): only the odd*odd -> even products survive.
SuperAlgebra annex(const SuperAlgebra& A);

SuperAlgebra direct_sum(const SuperAlgebra& A, const SuperAlgebra& B);

/// Re-reads the superalgebra as an ungraded algebra on m+n even generators.
/// Requires all odd*odd products to vanish (otherwise the result would not be
/// commutative); throws NonzeroOddOddProducts.
SuperAlgebra forget_grading(const SuperAlgebra& A);

/// alpha symmetric, beta and gamma matched, delta antisymmetric.
bool is_supercommutative(const SuperAlgebra& A);

/// One product assignment: key "e1.f1" with a combination [["f1", "1/2"], ...].
using ProductTable =
    std::vector<std::pair<std::string,
                          std::vector<std::pair<std::string, std::string>>>>;

/// Builds an algebra from labelled product assignments. With complete = true
/// the unlisted mirror products are filled in supercommutatively (gamma from
/// beta, symmetric alpha, antisymmetric delta); explicitly listed mirrors are
/// kept as given so malformed inputs stay representable.
SuperAlgebra algebra_from_products(int m, int n, std::string name,
                                   const ProductTable& products,
                                   bool complete = true);

/// Canonical product table of an algebra (even*even with i <= j, even*odd,
/// odd*odd with p < q; zero products omitted), the inverse of
/// algebra_from_products on supercommutative input.
ProductTable products_of(const SuperAlgebra& A);

}  // namespace degenlab
