#pragma once

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "degenlab/errors.hpp"

namespace degenlab {

/// Exact rational scalar, always in lowest terms with a positive denominator.
/// Storage is 128-bit: wide enough for every computation the catalog drives
/// (including polynomial gcd chains), and every product and sum is still
/// overflow-checked so a violation throws instead of wrapping.
class Rational {
 public:
  using int_t = __int128;

  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design (Eigen literals)
  Rational(int_t n, int_t d) : num_(n), den_(d) { normalize(); }

  static Rational from_string(std::string_view s);

  int_t num() const { return num_; }
  int_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inverse() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Serializes as "p" or "p/q".
  std::string str() const;

 private:
  void normalize();

  int_t num_ = 0;
  int_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.abs(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace degenlab

namespace std {
template <>
struct hash<degenlab::Rational> {
  size_t operator()(const degenlab::Rational& r) const {
    auto mix = [](degenlab::Rational::int_t v) {
      return hash<unsigned long long>()(static_cast<unsigned long long>(v)) ^
             (hash<long long>()(static_cast<long long>(v >> 64)) << 1);
    };
    return mix(r.num()) * 1000003u ^ mix(r.den());
  }
};
}  // namespace std

namespace Eigen {
template <>
struct NumTraits<degenlab::Rational> : GenericNumTraits<degenlab::Rational> {
  typedef degenlab::Rational Real;
  typedef degenlab::Rational NonInteger;
  typedef degenlab::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 10
  };
  static inline Real epsilon() { return degenlab::Rational(0); }
  static inline Real dummy_precision() { return degenlab::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
