#include "degenlab/multi_poly.hpp"

#include <algorithm>

namespace degenlab {

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

MultiPoly::Monomial merge_monomials(const MultiPoly::Monomial& a,
                                    const MultiPoly::Monomial& b) {
  MultiPoly::Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (a[i].first > b[j].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

}  // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(merge_monomials(ma, mb), ca * cb);
  return out;
}

MultiPoly operator*(const Rational& c, MultiPoly p) {
  if (c.is_zero()) return MultiPoly();
  MultiPoly out;
  for (const auto& [m, coeff] : p.terms()) out.add_term(m, c * coeff);
  return out;
}

MultiPoly MultiPoly::scale_variables(const std::vector<int>& vars,
                                     int scale_var) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    int total = 0;
    for (const auto& [v, e] : m) {
      if (std::find(vars.begin(), vars.end(), v) != vars.end()) total += e;
    }
    Monomial scaled = m;
    if (total > 0) {
      scaled = merge_monomials(m, {{scale_var, total}});
    }
    out.add_term(scaled, c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (const auto& [v, e] : m) {
      out += "*x" + std::to_string(v);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::optional<Rational> constant_ratio(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) fail("ZeroDenominator", "constant_ratio with zero denominator");
  if (p.is_zero()) return Rational(0);
  const auto& pm = *p.terms().begin();
  const auto& qm = *q.terms().begin();
  if (pm.first != qm.first) return std::nullopt;
  Rational c = pm.second / qm.second;
  if (p == c * q) return c;
  return std::nullopt;
}

}  // namespace degenlab
