#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "degenlab/multi_poly.hpp"
#include "degenlab/rational.hpp"
#include "degenlab/super_algebra.hpp"

namespace degenlab {

/// Element of the exterior algebra on eight anticommuting generators
/// xi_1..xi_8 (xi_i^2 = 0, xi_i xi_j = -xi_j xi_i). A monomial is the bitmask
/// of its sorted generator set; bit b stands for xi_{b+1}.
class GrassmannElement {
 public:
  GrassmannElement() = default;
  static GrassmannElement monomial(uint8_t mask, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<uint8_t, Rational>>& terms() const { return terms_; }

  GrassmannElement& operator+=(const GrassmannElement& o);
  friend GrassmannElement operator*(const GrassmannElement& a,
                                    const GrassmannElement& b);
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(uint8_t mask, const Rational& c);

 private:
  std::vector<std::pair<uint8_t, Rational>> terms_;  // sorted by mask
};

/// Sign of xi_A * xi_B as +1/-1, or 0 when the generator sets overlap.
int grassmann_sign(uint8_t a, uint8_t b);

/// Element of the Grassmann envelope G_0 (x) A_0 + G_1 (x) A_1, with formal
/// polynomial coefficients (used to carry the multilinearization variables).
/// The parity-matching invariant holds for every stored term: the Grassmann
/// monomial and the basis vector have equal parity.
class EnvelopeElement {
 public:
  EnvelopeElement() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<uint8_t, int>, MultiPoly>& terms() const { return terms_; }

  void add_term(uint8_t mask, int basis, const MultiPoly& coeff);

  EnvelopeElement& operator+=(const EnvelopeElement& o);
  friend EnvelopeElement operator*(const MultiPoly& c, const EnvelopeElement& e);

 private:
  std::map<std::pair<uint8_t, int>, MultiPoly> terms_;
};

/// Envelope product: (g (x) a)(h (x) b) = (-1)^{|a||h|} gh (x) ab, with ab
/// expanded through the structure constants of A.
EnvelopeElement envelope_product(const SuperAlgebra& A, const EnvelopeElement& u,
                                 const EnvelopeElement& v);

/// xi_{2s-1} xi_{2s} (x) v for even v, xi_{2s-1} (x) v for odd v; the four
/// slots s = 1..4 use the disjoint generator blocks {1,2},{3,4},{5,6},{7,8}.
EnvelopeElement tagged_embed(const SuperAlgebra& A, int basis_index, int slot);

}  // namespace degenlab
