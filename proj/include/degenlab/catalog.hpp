#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degenlab/super_algebra.hpp"

namespace degenlab {

using Variety = std::pair<int, int>;

/// Expected Burde column of an entry: the values the invariant computation is
/// expected to produce at (1,1), (1,2), (2,2) (absent = expected undefined),
/// plus the literal column text. `flagged` marks entries whose printed column
/// disagrees with the recomputed value.
struct BurdeExpectation {
  std::optional<Rational> c11, c12, c22;
  std::string printed;
  bool flagged = false;
};

struct CatalogEntry {
  std::string name;
  Variety variety;
  SuperAlgebra algebra;
  int expected_aut_dim = 0;
  bool expected_associative = false;
  std::optional<BurdeExpectation> expected_burde;
  bool is_zero = false;
};

/// Name normalization: sub/superscript order ("S^3_2" -> "S_2^3"), direct-sum
/// glyphs to '+', spaces stripped.
std::string normalize_name(const std::string& raw);

/// All entries in table order, zero algebra last within each variety.
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry& catalog_get(const std::string& name,
                                std::optional<Variety> variety = std::nullopt);

std::vector<const CatalogEntry*> catalog_list(Variety variety);

}  // namespace degenlab
