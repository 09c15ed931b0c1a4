#pragma once

#include <optional>
#include <string>

#include "degenlab/identities.hpp"
#include "degenlab/multi_poly.hpp"
#include "degenlab/super_algebra.hpp"

namespace degenlab {

/// Burde quotient c_{i,j} = tr(L(x)^i) tr(L(y)^j) / tr(L(x)^i L(y)^j) over
/// generic x, y. Defined only when both trace polynomials are nonzero and the
/// quotient is a constant; otherwise the reason records which part failed.
struct BurdeResult {
  enum class Status { Defined, DenominatorZero, NumeratorZero, NotConstant };

  Status status = Status::DenominatorZero;
  Rational value;  // meaningful iff status == Defined
  int i = 0, j = 0;

  bool defined() const { return status == Status::Defined; }
  std::string str() const;

  friend bool operator==(const BurdeResult& a, const BurdeResult& b) {
    return a.status == b.status && a.i == b.i && a.j == b.j &&
           (a.status != Status::Defined || a.value == b.value);
  }
};

/// Dimension of the space of even derivations (block-diagonal D with
/// D(xy) = D(x)y + xD(y)); the tangent-space dimension of the graded
/// automorphism group.
int derivation_dimension(const SuperAlgebra& A);

BurdeResult burde_invariant(const SuperAlgebra& A, int i, int j);

/// Left-multiplication operator of a generic element with symbolic
/// coordinates var_base..var_base+m+n-1 (exposed for the symbolic property
/// tests).
DenseMatrix<MultiPoly> generic_left_multiplication(const SuperAlgebra& A,
                                                   int var_base);

struct SubProfile {
  PowerProfile power_profile;
  int derivation_dim = 0;
  bool associative = false;
  BurdeResult burde_11, burde_12, burde_22;
};

struct InvariantProfile {
  PowerProfile power_profile;
  int derivation_dim = 0;
  bool associative = false;
  BurdeResult burde_11, burde_12, burde_22;
  PowerProfile annex_power_profile;
  SubProfile even_part_profile;
};

InvariantProfile invariant_profile(const SuperAlgebra& A);

}  // namespace degenlab
