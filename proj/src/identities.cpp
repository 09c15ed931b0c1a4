#include "degenlab/identities.hpp"

#include <sstream>

namespace degenlab {

namespace {

// P(x, y) = ((x x) y) x - (x x)(y x) in the envelope.
EnvelopeElement jordan_defect(const SuperAlgebra& A, const EnvelopeElement& x,
                              const EnvelopeElement& y) {
  EnvelopeElement xx = envelope_product(A, x, x);
  EnvelopeElement lhs = envelope_product(A, envelope_product(A, xx, y), x);
  EnvelopeElement rhs = envelope_product(A, xx, envelope_product(A, y, x));
  EnvelopeElement out = lhs;
  out += MultiPoly(-1) * rhs;
  return out;
}

EnvelopeElement build_x(const SuperAlgebra& A, int b1, int b2, int b4) {
  EnvelopeElement x;
  x += MultiPoly::variable(0) * tagged_embed(A, b1, 1);
  x += MultiPoly::variable(1) * tagged_embed(A, b2, 2);
  x += MultiPoly::variable(2) * tagged_embed(A, b4, 4);
  return x;
}

}  // namespace

IdentityReport check_jordan_super(const SuperAlgebra& A) {
  IdentityReport report;

  // Supercommutativity first: xy = (-1)^{|x||y|} yx on all basis pairs.
  const int d = A.total_dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const bool both_odd = i >= A.m && j >= A.m;
      QVector fwd = basis_product(A, i, j);
      QVector bwd = basis_product(A, j, i);
      for (int k = 0; k < d; ++k) {
        Rational expect = both_odd ? -bwd[k] : bwd[k];
        if (!(fwd[k] == expect)) {
          report.pass = false;
          report.kind = IdentityReport::WitnessKind::Supercommutativity;
          report.commutativity_witness = {i, j, k};
          return report;
        }
      }
    }
  }

  for (int b1 = 0; b1 < d; ++b1)
    for (int b2 = 0; b2 < d; ++b2)
      for (int b3 = 0; b3 < d; ++b3)
        for (int b4 = 0; b4 < d; ++b4) {
          EnvelopeElement x = build_x(A, b1, b2, b4);
          EnvelopeElement y = tagged_embed(A, b3, 3);
          EnvelopeElement p = jordan_defect(A, x, y);
          if (p.is_zero()) continue;
          report.pass = false;
          report.kind = IdentityReport::WitnessKind::JordanResidual;
          report.tuple = {b1, b2, b3, b4};
          report.monomial = p.terms().begin()->second.terms().begin()->first;
          for (const auto& [key, poly] : p.terms()) {
            auto it = poly.terms().find(report.monomial);
            if (it == poly.terms().end()) continue;
            report.residual.push_back({key.first, key.second, it->second});
          }
          return report;
        }
  return report;
}

bool reevaluate_jordan_witness(const SuperAlgebra& A, const IdentityReport& r) {
  if (r.kind != IdentityReport::WitnessKind::JordanResidual) return false;
  EnvelopeElement x = build_x(A, r.tuple[0], r.tuple[1], r.tuple[3]);
  EnvelopeElement y = tagged_embed(A, r.tuple[2], 3);
  EnvelopeElement p = jordan_defect(A, x, y);
  std::vector<IdentityReport::ResidualTerm> recomputed;
  for (const auto& [key, poly] : p.terms()) {
    auto it = poly.terms().find(r.monomial);
    if (it == poly.terms().end()) continue;
    recomputed.push_back({key.first, key.second, it->second});
  }
  if (recomputed.empty() || recomputed.size() != r.residual.size()) return false;
  for (size_t i = 0; i < recomputed.size(); ++i) {
    if (recomputed[i].grassmann_mask != r.residual[i].grassmann_mask ||
        recomputed[i].basis != r.residual[i].basis ||
        !(recomputed[i].coeff == r.residual[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::string IdentityReport::describe() const {
  if (pass) return "pass";
  std::ostringstream os;
  if (kind == WitnessKind::Supercommutativity) {
    os << "supercommutativity fails on basis pair (" << commutativity_witness[0]
       << ", " << commutativity_witness[1] << "), component "
       << commutativity_witness[2];
  } else {
    os << "Jordan identity fails on basis tuple (" << tuple[0] << ", "
       << tuple[1] << ", " << tuple[2] << ", " << tuple[3]
       << "); nonzero residual with " << residual.size() << " term(s)";
  }
  return os.str();
}

AssociativityReport check_associative(const SuperAlgebra& A) {
  AssociativityReport report;
  const int d = A.total_dim();
  auto mul = [&](const QVector& x, const QVector& y) { return product(A, x, y); };
  std::vector<QVector> basis;
  for (int i = 0; i < d; ++i) {
    QVector v = QVector::Zero(d);
    v[i] = Rational(1);
    basis.push_back(v);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        QVector lhs = mul(mul(basis[i], basis[j]), basis[k]);
        QVector rhs = mul(basis[i], mul(basis[j], basis[k]));
        if (lhs != rhs) {
          report.associative = false;
          report.witness = {{i, j, k}};
          return report;
        }
      }
  return report;
}

}  // namespace degenlab
