#pragma once

#include <Eigen/Core>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degenlab/rational.hpp"

namespace degenlab {

/// Laurent polynomial in the single parameter t, with exact rational
/// coefficients. Terms are kept sorted by exponent with no zero coefficients,
/// so equality is structural. Exponents may be negative ("1 - 2*t^-1").
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c) { *this = LaurentPoly(Rational(c)); }  // NOLINT
  explicit LaurentPoly(const Rational& c, int exp = 0) {
    if (!c.is_zero()) terms_.emplace_back(exp, c);
  }

  static LaurentPoly t(int exp = 1) { return LaurentPoly(Rational(1), exp); }

  /// Parses the grammar `term (('+'|'-') term)*` with
  /// `term := coeff | coeff '*' 't' ['^' int] | ['-'] 't' ['^' int]`,
  /// coeff a rational "p" or "p/q". Examples: "1 - 2*t^-1", "t^2", "-t".
  static LaurentPoly parse(std::string_view s);

  std::string str() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exp() const;
  int max_exp() const;
  Rational coeff(int exp) const;
  Rational constant_term() const { return coeff(0); }
  const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }

  /// Evaluation at a nonzero rational point (or any point when no negative
  /// exponents are present).
  Rational eval(const Rational& t0) const;

  LaurentPoly shifted(int k) const;  // multiplication by t^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& c, LaurentPoly p);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(int exp, const Rational& c);

  std::vector<std::pair<int, Rational>> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Helpers for ordinary (non-negative exponent) polynomials in t, used by the
// rational-function normalization.
bool is_ordinary(const LaurentPoly& p);
LaurentPoly poly_mod(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_div(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);  // monic result

}  // namespace degenlab

namespace Eigen {
template <>
struct NumTraits<degenlab::LaurentPoly>
    : GenericNumTraits<degenlab::LaurentPoly> {
  typedef degenlab::LaurentPoly Real;
  typedef degenlab::LaurentPoly NonInteger;
  typedef degenlab::LaurentPoly Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return degenlab::LaurentPoly(); }
  static inline Real dummy_precision() { return degenlab::LaurentPoly(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
