#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>

#include "degenlab/laurent_poly.hpp"

namespace degenlab {

/// Quotient of two ordinary polynomials in t, kept gcd-reduced with a monic
/// denominator so equality is structural. Values of this type arise when
/// structure constants are transported through a parametrized basis change.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long long c) : num_(c), den_(1) {}  // NOLINT
  explicit RationalFunction(const Rational& c) : num_(c), den_(1) {}
  RationalFunction(const LaurentPoly& p);  // NOLINT: natural embedding
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// ord_{t=0}(numerator) - ord_{t=0}(denominator). Throws ZeroInput on 0.
  int valuation_at_zero() const;

  /// Limit as t -> 0: 0 for positive valuation, the lowest-order coefficient
  /// ratio at valuation 0, and no value (a pole) for negative valuation.
  /// The zero function has limit 0.
  std::optional<Rational> limit_at_zero() const;

  Rational eval(const Rational& t0) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace degenlab

namespace Eigen {
template <>
struct NumTraits<degenlab::RationalFunction>
    : GenericNumTraits<degenlab::RationalFunction> {
  typedef degenlab::RationalFunction Real;
  typedef degenlab::RationalFunction NonInteger;
  typedef degenlab::RationalFunction Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return degenlab::RationalFunction(); }
  static inline Real dummy_precision() { return degenlab::RationalFunction(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
