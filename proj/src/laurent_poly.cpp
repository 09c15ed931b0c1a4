#include "degenlab/laurent_poly.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace degenlab {

void LaurentPoly::add_term(int exp, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const auto& term, int e) { return term.first < e; });
  if (it != terms_.end() && it->first == exp) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {exp, c});
  }
}

int LaurentPoly::min_exp() const {
  if (is_zero()) fail("ZeroInput", "min_exp of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) fail("ZeroInput", "max_exp of zero polynomial");
  return terms_.back().first;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const auto& term, int e) { return term.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return Rational(0);
}

Rational LaurentPoly::eval(const Rational& t0) const {
  if (is_zero()) return Rational(0);
  if (t0.is_zero() && min_exp() < 0) {
    fail("ZeroInput", "evaluating a pole at t=0");
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational p(1);
    int k = e < 0 ? -e : e;
    Rational base = e < 0 ? t0.inverse() : t0;
    for (int i = 0; i < k; ++i) p *= base;
    acc += c * p;
  }
  return acc;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  for (auto& term : out.terms_) term.first += k;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly operator*(const Rational& c, LaurentPoly p) {
  if (c.is_zero()) return LaurentPoly();
  for (auto& term : p.terms_) term.second *= c;
  return p;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    long long out = 0;
    auto [ptr, ec] =
        std::from_chars(s.data() + start, s.data() + pos, out);
    if (ec != std::errc() || ptr != s.data() + pos || pos == start) {
      fail("ParseError", "bad integer in '" + std::string(s) + "'");
    }
    return out;
  }
  Rational rational() {
    long long n = integer();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      return Rational(n, integer());
    }
    return Rational(n);
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view sv) {
  Cursor cur{sv};
  LaurentPoly out;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      ++cur.pos;
    } else if (!first) {
      fail("ParseError", "expected '+' or '-' in '" + std::string(sv) + "'");
    }
    first = false;
    cur.skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (cur.peek() != 't') {
      coeff = cur.rational();
      have_coeff = true;
    }
    int exp = 0;
    cur.skip_ws();
    if (have_coeff && cur.peek() == '*') ++cur.pos;
    cur.skip_ws();
    if (cur.peek() == 't') {
      ++cur.pos;
      exp = 1;
      cur.skip_ws();
      if (cur.peek() == '^') {
        ++cur.pos;
        exp = static_cast<int>(cur.integer());
      }
    } else if (!have_coeff) {
      fail("ParseError", "expected term in '" + std::string(sv) + "'");
    }
    out.add_term(exp, sign == 1 ? coeff : -coeff);
  }
  if (first) fail("ParseError", "empty polynomial literal");
  return out;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  // Descending exponents, matching the catalog's "1 - 2*t^-1" style.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    bool neg = c < Rational(0);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str() + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.str();
}

bool is_ordinary(const LaurentPoly& p) {
  return p.is_zero() || p.min_exp() >= 0;
}

LaurentPoly poly_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail("ZeroDenominator", "polynomial division by zero");
  LaurentPoly rem = a;
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= b.max_exp()) {
    int e = rem.max_exp() - b.max_exp();
    Rational c = rem.coeff(rem.max_exp()) / b.coeff(b.max_exp());
    LaurentPoly term(c, e);
    quot += term;
    rem -= term * b;
  }
  return quot;
}

LaurentPoly poly_mod(const LaurentPoly& a, const LaurentPoly& b) {
  return a - poly_div(a, b) * b;
}

namespace {

// Scales to coprime integer coefficients; the unit factor is irrelevant for
// gcd purposes.
LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Rational content(0);
  for (const auto& [e, c] : p.terms()) {
    // gcd of rationals: gcd of numerators over lcm of denominators.
    if (content.is_zero()) {
      content = c.abs();
    } else {
      Rational x = c.abs();
      // gcd(a/b, c/d) = gcd(a*d, c*b)/(b*d)
      auto g = [](Rational::int_t u, Rational::int_t v) {
        if (u < 0) u = -u;
        if (v < 0) v = -v;
        while (v) {
          Rational::int_t t = u % v;
          u = v;
          v = t;
        }
        return u;
      };
      content = Rational(g(content.num() * x.den(), x.num() * content.den()),
                         content.den() * x.den());
    }
  }
  return content.inverse() * p;
}

// Euclidean remainder up to a unit: each elimination step scales by the
// divisor's leading coefficient instead of dividing, then strips the content
// again so intermediates never stack up scale factors.
LaurentPoly remainder_up_to_unit(LaurentPoly a, const LaurentPoly& b) {
  const Rational lead_b = b.coeff(b.max_exp());
  while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
    Rational lead_a = a.coeff(a.max_exp());
    int shift = a.max_exp() - b.max_exp();
    a = primitive_part(lead_b * a - lead_a * b.shifted(shift));
  }
  return a;
}

}  // namespace

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  // Primitive remainder sequence; remainders are only needed up to units.
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    LaurentPoly r = remainder_up_to_unit(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.coeff(a.max_exp()).inverse() * a;
}

}  // namespace degenlab
