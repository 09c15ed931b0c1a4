#include "degenlab/rational_function.hpp"

#include <ostream>

namespace degenlab {

RationalFunction::RationalFunction(const LaurentPoly& p) {
  if (p.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  int v = p.min_exp();
  if (v < 0) {
    num_ = p.shifted(-v);
    den_ = LaurentPoly::t(-v);
  } else {
    num_ = p;
    den_ = LaurentPoly(1);
  }
}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) fail("ZeroDenominator", "rational function with zero denominator");
  // Clear negative exponents by a common shift, then reduce.
  int shift = 0;
  if (!num.is_zero()) shift = std::min(num.min_exp(), 0);
  shift = std::min(shift, std::min(den.min_exp(), 0));
  num_ = num.shifted(-shift);
  den_ = den.shifted(-shift);
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Common t-power first; it is the whole gcd in the frequent monomial case.
  int shift = std::min(num_.min_exp(), den_.min_exp());
  if (shift > 0) {
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
  }
  if (den_.max_exp() > 0 && num_.max_exp() > 0 &&
      !(den_.is_monomial() && den_.min_exp() > 0)) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_zero() && !(g == LaurentPoly(1))) {
      num_ = poly_div(num_, g);
      den_ = poly_div(den_, g);
    }
  }
  Rational lead = den_.coeff(den_.max_exp());
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

int RationalFunction::valuation_at_zero() const {
  if (is_zero()) fail("ZeroInput", "valuation of the zero function");
  return num_.min_exp() - den_.min_exp();
}

std::optional<Rational> RationalFunction::limit_at_zero() const {
  if (is_zero()) return Rational(0);
  int v = valuation_at_zero();
  if (v >= 1) return Rational(0);
  if (v == 0) return num_.coeff(num_.min_exp()) / den_.coeff(den_.min_exp());
  return std::nullopt;
}

Rational RationalFunction::eval(const Rational& t0) const {
  Rational d = den_.eval(t0);
  if (d.is_zero()) fail("ZeroDenominator", "evaluation at a pole");
  return num_.eval(t0) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) fail("ZeroDenominator", "division by the zero function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

std::string RationalFunction::str() const {
  if (den_ == LaurentPoly(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.str();
}

}  // namespace degenlab
