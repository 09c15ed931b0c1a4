#include "degenlab/super_algebra.hpp"

#include <cctype>

namespace degenlab {

std::string SuperAlgebra::basis_label(int i) const {
  if (i < 0 || i >= m + n) fail("IndexOutOfRange", "basis index out of range");
  if (i < m) return "e" + std::to_string(i + 1);
  return "f" + std::to_string(i - m + 1);
}

SuperAlgebra zero_algebra(int m, int n, std::string name) {
  return SuperAlgebra(m, n, std::move(name));
}

QVector product(const SuperAlgebra& A, const QVector& x, const QVector& y) {
  const int m = A.m, n = A.n;
  if (x.size() != m + n || y.size() != m + n)
    fail("DimensionMismatch", "coefficient tuple length != m+n");
  QVector out = QVector::Zero(m + n);
  for (int i = 0; i < m; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < m; ++j) {
      if (y[j].is_zero()) continue;
      Rational c = x[i] * y[j];
      for (int k = 0; k < m; ++k) out[k] += c * A.alpha(i, j, k);
    }
    for (int q = 0; q < n; ++q) {
      if (y[m + q].is_zero()) continue;
      Rational c = x[i] * y[m + q];
      for (int r = 0; r < n; ++r) out[m + r] += c * A.beta(i, q, r);
    }
  }
  for (int p = 0; p < n; ++p) {
    if (x[m + p].is_zero()) continue;
    for (int j = 0; j < m; ++j) {
      if (y[j].is_zero()) continue;
      Rational c = x[m + p] * y[j];
      for (int r = 0; r < n; ++r) out[m + r] += c * A.gamma(p, j, r);
    }
    for (int q = 0; q < n; ++q) {
      if (y[m + q].is_zero()) continue;
      Rational c = x[m + p] * y[m + q];
      for (int k = 0; k < m; ++k) out[k] += c * A.delta(p, q, k);
    }
  }
  return out;
}

QVector basis_product(const SuperAlgebra& A, int i, int j) {
  QVector x = QVector::Zero(A.total_dim());
  QVector y = QVector::Zero(A.total_dim());
  x[i] = Rational(1);
  y[j] = Rational(1);
  return product(A, x, y);
}

SuperAlgebra change_basis(const SuperAlgebra& A, const RationalBasisChange& g) {
  const int m = A.m, n = A.n;
  if (g.even.rows() != m || g.even.cols() != m || g.odd.rows() != n ||
      g.odd.cols() != n) {
    fail("DimensionMismatch", "basis change blocks do not match (m, n)");
  }
  QMatrix even_inv = inverse(g.even);  // throws SingularMatrix
  QMatrix odd_inv = n > 0 ? inverse(g.odd) : QMatrix(0, 0);

  auto preimage = [&](int idx) {
    QVector v = QVector::Zero(m + n);
    if (idx < m) {
      for (int a = 0; a < m; ++a) v[a] = even_inv(a, idx);
    } else {
      for (int a = 0; a < n; ++a) v[m + a] = odd_inv(a, idx - m);
    }
    return v;
  };
  auto apply_g = [&](const QVector& v) {
    QVector out = QVector::Zero(m + n);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) out[r] += g.even(r, c) * v[c];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) out[m + r] += g.odd(r, c) * v[m + c];
    return out;
  };

  SuperAlgebra out(m, n, A.name);
  for (int i = 0; i < m + n; ++i) {
    QVector gi = preimage(i);
    for (int j = 0; j < m + n; ++j) {
      QVector w = apply_g(product(A, gi, preimage(j)));
      const bool even_result = (i < m) == (j < m);
      if (even_result) {
        for (int k = 0; k < m; ++k) {
          if (i < m) {
            out.alpha(i, j, k) = w[k];
          } else {
            out.delta(i - m, j - m, k) = w[k];
          }
        }
      } else {
        for (int q = 0; q < n; ++q) {
          if (i < m) {
            out.beta(i, j - m, q) = w[m + q];
          } else {
            out.gamma(i - m, j, q) = w[m + q];
          }
        }
      }
    }
  }
  return out;
}

namespace {

// Graded subspace as RREF bases of its even and odd components, each row a
// coordinate vector in the ambient even (resp. odd) block.
struct GradedSpan {
  QMatrix even;
  QMatrix odd;
};

GradedSpan reduce_span(int m, int n, const std::vector<QVector>& vectors) {
  std::vector<std::vector<Rational>> evens, odds;
  for (const auto& v : vectors) {
    std::vector<Rational> e(m), o(n);
    bool has_e = false, has_o = false;
    for (int i = 0; i < m; ++i) {
      e[static_cast<size_t>(i)] = v[i];
      has_e = has_e || !v[i].is_zero();
    }
    for (int p = 0; p < n; ++p) {
      o[static_cast<size_t>(p)] = v[m + p];
      has_o = has_o || !v[m + p].is_zero();
    }
    if (has_e) evens.push_back(std::move(e));
    if (has_o) odds.push_back(std::move(o));
  }
  GradedSpan span;
  span.even = evens.empty() ? QMatrix(0, m) : row_space_basis(evens);
  span.odd = odds.empty() ? QMatrix(0, n) : row_space_basis(odds);
  return span;
}

std::vector<QVector> span_vectors(int m, int n, const GradedSpan& s) {
  std::vector<QVector> out;
  for (Eigen::Index r = 0; r < s.even.rows(); ++r) {
    QVector v = QVector::Zero(m + n);
    for (int c = 0; c < m; ++c) v[c] = s.even(r, c);
    out.push_back(v);
  }
  for (Eigen::Index r = 0; r < s.odd.rows(); ++r) {
    QVector v = QVector::Zero(m + n);
    for (int c = 0; c < n; ++c) v[m + c] = s.odd(r, c);
    out.push_back(v);
  }
  return out;
}

}  // namespace

PowerProfile power_profile(const SuperAlgebra& A, int r_max) {
  if (r_max < 1) fail("IndexOutOfRange", "r_max must be >= 1");
  const int m = A.m, n = A.n;
  std::vector<GradedSpan> powers;  // powers[r-1] = J^r
  {
    std::vector<QVector> basis;
    for (int i = 0; i < m + n; ++i) {
      QVector v = QVector::Zero(m + n);
      v[i] = Rational(1);
      basis.push_back(v);
    }
    powers.push_back(reduce_span(m, n, basis));
  }
  for (int r = 2; r <= r_max; ++r) {
    std::vector<QVector> products;
    for (int s = 1; s <= r - 1; ++s) {
      auto lhs = span_vectors(m, n, powers[static_cast<size_t>(s - 1)]);
      auto rhs = span_vectors(m, n, powers[static_cast<size_t>(r - s - 1)]);
      for (const auto& u : lhs)
        for (const auto& v : rhs) products.push_back(product(A, u, v));
    }
    powers.push_back(reduce_span(m, n, products));
  }
  PowerProfile profile;
  for (const auto& s : powers)
    profile.emplace_back(static_cast<int>(s.even.rows()),
                         static_cast<int>(s.odd.rows()));
  return profile;
}

SuperAlgebra even_part(const SuperAlgebra& A) {
  SuperAlgebra out(A.m, 0, A.name.empty() ? "" : "(" + A.name + ")_0");
  out.alpha = A.alpha;
  return out;
}

SuperAlgebra annex(const SuperAlgebra& A) {
  SuperAlgebra out(A.m, A.n, A.name.empty() ? "" : "a(" + A.name + ")");
  out.delta = A.delta;
  return out;
}

SuperAlgebra direct_sum(const SuperAlgebra& A, const SuperAlgebra& B) {
  SuperAlgebra out(A.m + B.m, A.n + B.n,
                   A.name.empty() && B.name.empty() ? "" : A.name + "+" + B.name);
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < A.m; ++j)
      for (int k = 0; k < A.m; ++k) out.alpha(i, j, k) = A.alpha(i, j, k);
  for (int i = 0; i < B.m; ++i)
    for (int j = 0; j < B.m; ++j)
      for (int k = 0; k < B.m; ++k)
        out.alpha(A.m + i, A.m + j, A.m + k) = B.alpha(i, j, k);
  for (int i = 0; i < A.m; ++i)
    for (int p = 0; p < A.n; ++p)
      for (int q = 0; q < A.n; ++q) out.beta(i, p, q) = A.beta(i, p, q);
  for (int i = 0; i < B.m; ++i)
    for (int p = 0; p < B.n; ++p)
      for (int q = 0; q < B.n; ++q)
        out.beta(A.m + i, A.n + p, A.n + q) = B.beta(i, p, q);
  for (int p = 0; p < A.n; ++p)
    for (int i = 0; i < A.m; ++i)
      for (int q = 0; q < A.n; ++q) out.gamma(p, i, q) = A.gamma(p, i, q);
  for (int p = 0; p < B.n; ++p)
    for (int i = 0; i < B.m; ++i)
      for (int q = 0; q < B.n; ++q)
        out.gamma(A.n + p, A.m + i, A.n + q) = B.gamma(p, i, q);
  for (int p = 0; p < A.n; ++p)
    for (int q = 0; q < A.n; ++q)
      for (int k = 0; k < A.m; ++k) out.delta(p, q, k) = A.delta(p, q, k);
  for (int p = 0; p < B.n; ++p)
    for (int q = 0; q < B.n; ++q)
      for (int k = 0; k < B.m; ++k)
        out.delta(A.n + p, A.n + q, A.m + k) = B.delta(p, q, k);
  return out;
}

SuperAlgebra forget_grading(const SuperAlgebra& A) {
  if (!A.delta.all_zero())
    fail("NonzeroOddOddProducts",
         "ungraded view needs trivial odd*odd products");
  const int m = A.m, n = A.n, d = m + n;
  SuperAlgebra out(d, 0, A.name.empty() ? "" : A.name + " (ungraded)");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out.alpha(i, j, k) = A.alpha(i, j, k);
  for (int i = 0; i < m; ++i)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) out.alpha(i, m + p, m + q) = A.beta(i, p, q);
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < m; ++i)
      for (int q = 0; q < n; ++q) out.alpha(m + p, i, m + q) = A.gamma(p, i, q);
  return out;
}

namespace {

// Parses "e3" / "f1" into a full-basis coordinate index.
int parse_label(const SuperAlgebra& A, const std::string& label) {
  if (label.size() < 2 || (label[0] != 'e' && label[0] != 'f'))
    fail("ParseError", "bad basis label '" + label + "'");
  int idx = 0;
  for (size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      fail("ParseError", "bad basis label '" + label + "'");
    idx = idx * 10 + (label[i] - '0');
  }
  --idx;
  if (label[0] == 'e') {
    if (idx < 0 || idx >= A.m) fail("IndexOutOfRange", "label '" + label + "'");
    return idx;
  }
  if (idx < 0 || idx >= A.n) fail("IndexOutOfRange", "label '" + label + "'");
  return A.m + idx;
}

void set_constant(SuperAlgebra& A, int x, int y, int z, const Rational& c) {
  const int m = A.m;
  const bool xe = x < m, ye = y < m, ze = z < m;
  if (xe && ye) {
    if (!ze) fail("ParseError", "even*even product must land in the even part");
    A.alpha(x, y, z) = c;
  } else if (xe && !ye) {
    if (ze) fail("ParseError", "even*odd product must land in the odd part");
    A.beta(x, y - m, z - m) = c;
  } else if (!xe && ye) {
    if (ze) fail("ParseError", "odd*even product must land in the odd part");
    A.gamma(x - m, y, z - m) = c;
  } else {
    if (!ze) fail("ParseError", "odd*odd product must land in the even part");
    A.delta(x - m, y - m, z) = c;
  }
}

}  // namespace

SuperAlgebra algebra_from_products(int m, int n, std::string name,
                                   const ProductTable& products, bool complete) {
  SuperAlgebra A(m, n, std::move(name));
  std::vector<std::pair<int, int>> listed;
  for (const auto& [key, combo] : products) {
    auto dot = key.find('.');
    if (dot == std::string::npos)
      fail("ParseError", "product key '" + key + "' is not of the form x.y");
    int x = parse_label(A, key.substr(0, dot));
    int y = parse_label(A, key.substr(dot + 1));
    listed.emplace_back(x, y);
    for (const auto& [target, coeff] : combo) {
      set_constant(A, x, y, parse_label(A, target), Rational::from_string(coeff));
    }
  }
  if (complete) {
    auto was_listed = [&](int x, int y) {
      for (const auto& [a, b] : listed)
        if (a == x && b == y) return true;
      return false;
    };
    for (const auto& [x, y] : listed) {
      if (was_listed(y, x) || (x == y && x < m)) continue;
      const bool both_odd = x >= m && y >= m;
      QVector w = basis_product(A, x, y);
      for (int z = 0; z < m + n; ++z) {
        if (w[z].is_zero()) continue;
        set_constant(A, y, x, z, both_odd ? -w[z] : w[z]);
      }
    }
  }
  return A;
}

ProductTable products_of(const SuperAlgebra& A) {
  ProductTable table;
  auto emit = [&](int x, int y) {
    QVector w = basis_product(A, x, y);
    std::vector<std::pair<std::string, std::string>> combo;
    for (int z = 0; z < A.total_dim(); ++z) {
      if (w[z].is_zero()) continue;
      combo.emplace_back(A.basis_label(z), w[z].str());
    }
    if (!combo.empty())
      table.emplace_back(A.basis_label(x) + "." + A.basis_label(y), combo);
  };
  for (int i = 0; i < A.m; ++i)
    for (int j = i; j < A.m; ++j) emit(i, j);
  for (int i = 0; i < A.m; ++i)
    for (int p = 0; p < A.n; ++p) emit(i, A.m + p);
  for (int p = 0; p < A.n; ++p)
    for (int q = p + 1; q < A.n; ++q) emit(A.m + p, A.m + q);
  return table;
}

bool is_supercommutative(const SuperAlgebra& A) {
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < A.m; ++j)
      for (int k = 0; k < A.m; ++k)
        if (!(A.alpha(i, j, k) == A.alpha(j, i, k))) return false;
  for (int i = 0; i < A.m; ++i)
    for (int p = 0; p < A.n; ++p)
      for (int q = 0; q < A.n; ++q)
        if (!(A.beta(i, p, q) == A.gamma(p, i, q))) return false;
  for (int p = 0; p < A.n; ++p)
    for (int q = 0; q < A.n; ++q)
      for (int k = 0; k < A.m; ++k)
        if (!(A.delta(p, q, k) == -A.delta(q, p, k))) return false;
  return true;
}

}  // namespace degenlab
