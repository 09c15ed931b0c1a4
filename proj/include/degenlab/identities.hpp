#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "degenlab/grassmann.hpp"
#include "degenlab/super_algebra.hpp"

namespace degenlab {

/// Outcome of the Jordan membership check. On failure the witness pins down
/// either a supercommutativity violation or a nonvanishing coefficient of the
/// multilinearized identity, with enough data to re-evaluate it.
struct IdentityReport {
  enum class WitnessKind { None, Supercommutativity, JordanResidual };

  struct ResidualTerm {
    uint8_t grassmann_mask;
    int basis;
    Rational coeff;
  };

  bool pass = true;
  WitnessKind kind = WitnessKind::None;

  // Supercommutativity witness: the offending basis pair and component.
  std::array<int, 3> commutativity_witness{};  // (x, y, component)

  // Jordan witness: the basis tuple (b1, b2, b3, b4), the surviving monomial
  // in the formal coefficients (c1, c2, c4), and the nonzero residual.
  std::array<int, 4> tuple{};
  MultiPoly::Monomial monomial;
  std::vector<ResidualTerm> residual;

  std::string describe() const;
};

/// Decides Jordan superalgebra membership: supercommutativity first, then the
/// vanishing of P(x, y) = ((x x) y) x - (x x)(y x) in the truncated Grassmann
/// envelope with x = c1 u1 + c2 u2 + c4 u4, y = u3 over all basis tuples.
IdentityReport check_jordan_super(const SuperAlgebra& A);

/// Re-evaluates a Jordan residual witness; true when the recomputed residual
/// for the witness tuple/monomial matches and is nonzero.
bool reevaluate_jordan_witness(const SuperAlgebra& A, const IdentityReport& r);

struct AssociativityReport {
  bool associative = true;
  std::optional<std::array<int, 3>> witness;  // basis triple (x, y, z)
};

/// (xy)z = x(yz) on all basis triples of the superalgebra product itself.
AssociativityReport check_associative(const SuperAlgebra& A);

}  // namespace degenlab
