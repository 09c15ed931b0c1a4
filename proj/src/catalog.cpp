#include "degenlab/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace degenlab {

std::string normalize_name(const std::string& raw) {
  std::string s;
  for (size_t i = 0; i < raw.size();) {
    unsigned char c = static_cast<unsigned char>(raw[i]);
    if (c == ' ') {
      ++i;
      continue;
    }
    // UTF-8 direct-sum sign.
    if (c == 0xE2 && i + 2 < raw.size() &&
        static_cast<unsigned char>(raw[i + 1]) == 0x8A &&
        static_cast<unsigned char>(raw[i + 2]) == 0x95) {
      s += '+';
      i += 3;
      continue;
    }
    s += raw[i];
    ++i;
  }
  // Normalize each '+'-separated summand to base, then _sub, then ^sup.
  std::string out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t plus = s.find('+', start);
    std::string part = s.substr(start, plus == std::string::npos ? std::string::npos
                                                                 : plus - start);
    std::string base, sub, sup;
    size_t i = 0;
    while (i < part.size() && part[i] != '_' && part[i] != '^') base += part[i++];
    while (i < part.size()) {
      char which = part[i++];
      std::string tok;
      if (i < part.size() && part[i] == '{') {
        ++i;
        while (i < part.size() && part[i] != '}') tok += part[i++];
        if (i < part.size()) ++i;
        tok = "{" + tok + "}";
      } else {
        while (i < part.size() && part[i] != '_' && part[i] != '^') tok += part[i++];
      }
      (which == '_' ? sub : sup) = tok;
    }
    std::string norm = base;
    if (!sub.empty()) norm += "_" + sub;
    if (!sup.empty()) norm += "^" + sup;
    out += norm;
    if (plus == std::string::npos) break;
    out += '+';
    start = plus + 1;
  }
  return out;
}

namespace {

CatalogEntry entry(std::string name, Variety variety, const ProductTable& products,
                   int aut_dim, bool associative,
                   std::optional<BurdeExpectation> burde = std::nullopt,
                   bool is_zero = false) {
  CatalogEntry e;
  e.name = name;
  e.variety = variety;
  e.algebra = algebra_from_products(variety.first, variety.second, name, products);
  e.expected_aut_dim = aut_dim;
  e.expected_associative = associative;
  e.expected_burde = std::move(burde);
  e.is_zero = is_zero;
  return e;
}

BurdeExpectation burde_const(long long num, long long den, std::string printed,
                             bool flagged = false) {
  BurdeExpectation b;
  b.c11 = b.c12 = b.c22 = Rational(num, den);
  b.printed = std::move(printed);
  b.flagged = flagged;
  return b;
}

BurdeExpectation burde_values(Rational c11, Rational c12, Rational c22,
                              std::string printed, bool flagged = false) {
  BurdeExpectation b;
  b.c11 = c11;
  b.c12 = c12;
  b.c22 = c22;
  b.printed = std::move(printed);
  b.flagged = flagged;
  return b;
}

BurdeExpectation burde_none() {
  BurdeExpectation b;
  b.printed = "does not exist";
  return b;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;

  // ----- variety (1, 2) -----
  const Variety v12{1, 2};
  out.push_back(entry("U_1^s", v12, {{"e1.e1", {{"e1", "1"}}}}, 4, true,
                      burde_const(1, 1, "1")));
  out.push_back(entry("S_1^2", v12,
                      {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", "1/2"}}}}, 2,
                      false,
                      burde_values(Rational(9, 5), Rational(5, 3), Rational(25, 17),
                                   "2", /*flagged=*/true)));
  {
    // Printed column: does not exist. The quotient is in fact defined (= 2)
    // at (2,2), where both traces are nonzero; flagged as a discrepancy.
    BurdeExpectation b;
    b.c22 = Rational(2);
    b.printed = "does not exist";
    b.flagged = true;
    out.push_back(entry("S_1^3", v12,
                        {{"e1.f1", {{"f2", "1"}}}, {"f1.f2", {{"e1", "1"}}}}, 2,
                        false, b));
  }
  out.push_back(entry("S_2^2", v12,
                      {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", "1"}}}}, 2,
                      true, burde_const(2, 1, "2")));
  out.push_back(entry("S_2^3", v12, {{"f1.f2", {{"e1", "1"}}}}, 4, true,
                      burde_none()));
  out.push_back(entry("S_3^3", v12, {{"e1.f1", {{"f2", "1"}}}}, 3, true,
                      burde_none()));
  out.push_back(entry("S_4^3", v12,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e1.f1", {{"f1", "1"}}},
                       {"e1.f2", {{"f2", "1/2"}}}},
                      2, false,
                      burde_values(Rational(25, 9), Rational(45, 17), Rational(27, 11),
                                   "(2+(1/2)^i)(2+(1/2)^j)/(2+(1/2)^{i+j})")));
  out.push_back(entry("S_5^3", v12,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e1.f1", {{"f1", "1/2"}}},
                       {"e1.f2", {{"f2", "1/2"}}}},
                      4, false,
                      burde_values(Rational(8, 3), Rational(12, 5), Rational(2),
                                   "(1+2(1/2)^i)(1+2(1/2)^j)/(1+2(1/2)^{i+j})")));
  out.push_back(entry("S_6^3", v12,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e1.f1", {{"f1", "1"}}},
                       {"e1.f2", {{"f2", "1"}}}},
                      4, true, burde_const(3, 1, "3")));
  {
    // The printed formula holds at (1,1) and (1,2); at (2,2) the odd*odd
    // product contributes terms that make the quotient non-constant.
    BurdeExpectation b;
    b.c11 = Rational(8, 3);
    b.c12 = Rational(12, 5);
    b.printed = "(1+2(1/2)^i)(1+2(1/2)^j)/(1+2(1/2)^{i+j})";
    b.flagged = true;
    out.push_back(entry("S_7^3", v12,
                        {{"e1.e1", {{"e1", "1"}}},
                         {"e1.f1", {{"f1", "1/2"}}},
                         {"e1.f2", {{"f2", "1/2"}}},
                         {"f1.f2", {{"e1", "1"}}}},
                        3, false, b));
  }
  {
    // Same shape as S_7^3: the constant 3 holds at (1,1) and (1,2) only.
    BurdeExpectation b;
    b.c11 = Rational(3);
    b.c12 = Rational(3);
    b.printed = "3";
    b.flagged = true;
    out.push_back(entry("S_8^3", v12,
                        {{"e1.e1", {{"e1", "1"}}},
                         {"e1.f1", {{"f1", "1"}}},
                         {"e1.f2", {{"f2", "1"}}},
                         {"f1.f2", {{"e1", "1"}}}},
                        3, false, b));
  }
  out.push_back(entry("C^{1,2}", v12, {}, 5, true, std::nullopt, /*is_zero=*/true));

  // ----- variety (2, 1) -----
  const Variety v21{2, 1};
  out.push_back(entry("2U_1^s", v21,
                      {{"e1.e1", {{"e1", "1"}}}, {"e2.e2", {{"e2", "1"}}}}, 1, true));
  out.push_back(entry("U_1^s", v21, {{"e1.e1", {{"e1", "1"}}}}, 2, true));
  out.push_back(entry("B_1^s", v21,
                      {{"e1.e1", {{"e1", "1"}}}, {"e1.e2", {{"e2", "1"}}}}, 2, true));
  out.push_back(entry("B_2^s", v21,
                      {{"e1.e1", {{"e1", "1"}}}, {"e1.e2", {{"e2", "1/2"}}}}, 3,
                      false));
  out.push_back(entry("B_3^s", v21, {{"e1.e1", {{"e2", "1"}}}}, 3, true));
  out.push_back(entry("S_1^2+U_1^s", v21,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e2.e2", {{"e2", "1"}}},
                       {"e1.f1", {{"f1", "1/2"}}}},
                      1, false));
  out.push_back(entry("S_1^2", v21,
                      {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", "1/2"}}}}, 2,
                      false));
  out.push_back(entry("S_2^2+U_1^s", v21,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e2.e2", {{"e2", "1"}}},
                       {"e1.f1", {{"f1", "1"}}}},
                      1, true));
  out.push_back(entry("S_2^2", v21,
                      {{"e1.e1", {{"e1", "1"}}}, {"e1.f1", {{"f1", "1"}}}}, 2, true));
  out.push_back(entry("S_9^3", v21,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e1.e2", {{"e2", "1"}}},
                       {"e1.f1", {{"f1", "1/2"}}}},
                      2, false));
  out.push_back(entry("S_10^3", v21,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e1.e2", {{"e2", "1"}}},
                       {"e1.f1", {{"f1", "1"}}}},
                      2, true));
  out.push_back(entry("S_11^3", v21,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e1.e2", {{"e2", "1/2"}}},
                       {"e1.f1", {{"f1", "1/2"}}}},
                      3, false));
  out.push_back(entry("S_12^3", v21,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e1.e2", {{"e2", "1/2"}}},
                       {"e1.f1", {{"f1", "1"}}}},
                      3, false));
  out.push_back(entry("S_13^3", v21,
                      {{"e1.e1", {{"e1", "1"}}},
                       {"e2.e2", {{"e2", "1"}}},
                       {"e1.f1", {{"f1", "1/2"}}},
                       {"e2.f1", {{"f1", "1/2"}}}},
                      1, false));
  out.push_back(entry("C^{2,1}", v21, {}, 5, true, std::nullopt, /*is_zero=*/true));

  // ----- variety (0, 3): only the trivial superalgebra -----
  out.push_back(entry("C^{0,3}", {0, 3}, {}, 9, true, std::nullopt, /*is_zero=*/true));

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry& catalog_get(const std::string& name,
                                std::optional<Variety> variety) {
  std::string canonical = normalize_name(name);
  const CatalogEntry* found = nullptr;
  for (const auto& e : catalog_entries()) {
    if (e.name != canonical) continue;
    if (variety && e.variety != *variety) continue;
    if (found) {
      fail("UnknownName",
           "name '" + canonical + "' is ambiguous across varieties; pass one");
    }
    found = &e;
  }
  if (!found) fail("UnknownName", "no catalog entry named '" + canonical + "'");
  return *found;
}

std::vector<const CatalogEntry*> catalog_list(Variety variety) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog_entries())
    if (e.variety == variety) out.push_back(&e);
  return out;
}

}  // namespace degenlab
