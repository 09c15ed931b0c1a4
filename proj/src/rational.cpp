#include "degenlab/rational.hpp"

#include <charconv>
#include <ostream>

namespace degenlab {

namespace {

using int_t = Rational::int_t;

int_t gcd128(int_t a, int_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    int_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int_t checked_mul(int_t a, int_t b) {
  int_t out;
  if (__builtin_mul_overflow(a, b, &out))
    fail("Overflow", "rational arithmetic exceeded 128-bit range");
  return out;
}

int_t checked_add(int_t a, int_t b) {
  int_t out;
  if (__builtin_add_overflow(a, b, &out))
    fail("Overflow", "rational arithmetic exceeded 128-bit range");
  return out;
}

std::string int128_str(int_t v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // -2^127 negates onto itself; it never arises from normalized data.
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace

void Rational::normalize() {
  if (den_ == 0) fail("ZeroDenominator", "rational with zero denominator");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  int_t g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational& Rational::operator+=(const Rational& o) {
  int_t g = gcd128(den_, o.den_);
  int_t lhs_scale = o.den_ / g;
  int_t rhs_scale = den_ / g;
  int_t n = checked_add(checked_mul(num_, lhs_scale), checked_mul(o.num_, rhs_scale));
  int_t d = checked_mul(den_, lhs_scale);
  num_ = n;
  den_ = d;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  int_t g1 = gcd128(num_, o.den_);
  int_t g2 = gcd128(o.num_, den_);
  num_ = checked_mul(num_ / g1, o.num_ / g2);
  den_ = checked_mul(den_ / g2, o.den_ / g1);
  if (num_ == 0) den_ = 1;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail("ZeroDenominator", "division by zero rational");
  return *this *= o.inverse();
}

bool operator<(const Rational& a, const Rational& b) {
  // Cross-multiplication with the shared factor removed keeps this in range.
  int_t g = gcd128(a.den_, b.den_);
  int_t lhs = checked_mul(a.num_, b.den_ / g);
  int_t rhs = checked_mul(b.num_, a.den_ / g);
  return lhs < rhs;
}

Rational Rational::inverse() const {
  if (is_zero()) fail("ZeroDenominator", "inverse of zero");
  Rational r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_ < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Rational Rational::from_string(std::string_view s) {
  auto strip = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  s = strip(s);
  if (s.empty()) fail("ParseError", "empty rational literal");
  auto slash = s.find('/');
  auto parse_int = [&](std::string_view v) -> long long {
    v = strip(v);
    long long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
      fail("ParseError", "bad integer in rational literal: '" + std::string(v) + "'");
    }
    return out;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Rational::str() const {
  if (den_ == 1) return int128_str(num_);
  return int128_str(num_) + "/" + int128_str(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace degenlab
