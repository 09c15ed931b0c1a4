#include "degenlab/linalg.hpp"

namespace degenlab {

QMatrix row_space_basis(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return QMatrix(0, 0);
  const size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) fail("RaggedInput", "rows have differing lengths");
  }
  QMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return row_space_basis(m);
}

}  // namespace degenlab
