#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degenlab/rational.hpp"

namespace degenlab {

/// Sparse multivariate polynomial over the rationals. Variables are integer
/// indices; a monomial is a sorted (variable, exponent) list, so the zero
/// polynomial and constants need no variable universe attached. Used for the
/// symbolic generic-element computations (traces of multiplication operators,
/// formal multilinearization coefficients).
class MultiPoly {
 public:
  using Monomial = std::vector<std::pair<int, int>>;  // sorted by var, exp > 0

  MultiPoly() = default;
  MultiPoly(long long c) : MultiPoly(Rational(c)) {}  // NOLINT
  explicit MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_[{}] = c;
  }

  static MultiPoly variable(int v) {
    MultiPoly p;
    p.terms_[{{v, 1}}] = Rational(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, MultiPoly p);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Substitutes var -> scale_var * var for every var in `vars`; used to check
  /// homogeneity statements symbolically.
  MultiPoly scale_variables(const std::vector<int>& vars, int scale_var) const;

  std::string str() const;  // debugging aid, generic variable names x<i>

  void add_term(const Monomial& m, const Rational& c);

 private:
  std::map<Monomial, Rational> terms_;
};

/// Returns c with p = c*q as polynomials (c = 0 when p = 0), or nothing when
/// the two are not proportional. Throws ZeroDenominator when q = 0.
std::optional<Rational> constant_ratio(const MultiPoly& p, const MultiPoly& q);

}  // namespace degenlab

namespace Eigen {
template <>
struct NumTraits<degenlab::MultiPoly> : GenericNumTraits<degenlab::MultiPoly> {
  typedef degenlab::MultiPoly Real;
  typedef degenlab::MultiPoly NonInteger;
  typedef degenlab::MultiPoly Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 100,
    MulCost = 100
  };
  static inline Real epsilon() { return degenlab::MultiPoly(); }
  static inline Real dummy_precision() { return degenlab::MultiPoly(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
