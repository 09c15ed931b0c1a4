#include "degenlab/grassmann.hpp"

#include <algorithm>
#include <bit>

namespace degenlab {

GrassmannElement GrassmannElement::monomial(uint8_t mask, const Rational& c) {
  GrassmannElement e;
  e.add_term(mask, c);
  return e;
}

void GrassmannElement::add_term(uint8_t mask, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mask,
      [](const auto& term, uint8_t m) { return term.first < m; });
  if (it != terms_.end() && it->first == mask) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {mask, c});
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

int grassmann_sign(uint8_t a, uint8_t b) {
  if (a & b) return 0;  // xi_i^2 = 0
  // Sign of sorting the concatenation a..b: each generator of b passes every
  // generator of a that is strictly greater.
  int inversions = 0;
  for (int bit = 0; bit < 8; ++bit) {
    if (!(b & (1u << bit))) continue;
    inversions += std::popcount(static_cast<unsigned>(a >> (bit + 1)));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int sign = grassmann_sign(ma, mb);
      if (sign == 0) continue;
      out.add_term(static_cast<uint8_t>(ma | mb),
                   sign == 1 ? ca * cb : -(ca * cb));
    }
  return out;
}

void EnvelopeElement::add_term(uint8_t mask, int basis, const MultiPoly& coeff) {
  if (coeff.is_zero()) return;
  auto key = std::make_pair(mask, basis);
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EnvelopeElement& EnvelopeElement::operator+=(const EnvelopeElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

EnvelopeElement operator*(const MultiPoly& c, const EnvelopeElement& e) {
  EnvelopeElement out;
  for (const auto& [key, coeff] : e.terms())
    out.add_term(key.first, key.second, c * coeff);
  return out;
}

EnvelopeElement envelope_product(const SuperAlgebra& A, const EnvelopeElement& u,
                                 const EnvelopeElement& v) {
  const int m = A.m;
  EnvelopeElement out;
  for (const auto& [ku, cu] : u.terms()) {
    const uint8_t gu = ku.first;
    const int a = ku.second;
    for (const auto& [kv, cv] : v.terms()) {
      const uint8_t gv = kv.first;
      const int b = kv.second;
      int sign = grassmann_sign(gu, gv);
      if (sign == 0) continue;
      // Koszul sign: |a| * |h| with h the right-hand Grassmann factor.
      const int parity_a = a < m ? 0 : 1;
      const int parity_gv = std::popcount(static_cast<unsigned>(gv)) % 2;
      if (parity_a && parity_gv) sign = -sign;
      const uint8_t mask = static_cast<uint8_t>(gu | gv);
      MultiPoly coeff = cu * cv;
      if (sign == -1) coeff = -coeff;
      QVector w = basis_product(A, a, b);
      for (int k = 0; k < A.total_dim(); ++k) {
        if (w[k].is_zero()) continue;
        out.add_term(mask, k, w[k] * coeff);
      }
    }
  }
  return out;
}

EnvelopeElement tagged_embed(const SuperAlgebra& A, int basis_index, int slot) {
  if (slot < 1 || slot > 4) fail("IndexOutOfRange", "slot must be in 1..4");
  if (basis_index < 0 || basis_index >= A.total_dim())
    fail("IndexOutOfRange", "basis index out of range");
  const int lo = 2 * (slot - 1);  // bit of xi_{2s-1}
  uint8_t mask;
  if (basis_index < A.m) {
    mask = static_cast<uint8_t>((1u << lo) | (1u << (lo + 1)));
  } else {
    mask = static_cast<uint8_t>(1u << lo);
  }
  EnvelopeElement e;
  e.add_term(mask, basis_index, MultiPoly(1));
  return e;
}

}  // namespace degenlab
