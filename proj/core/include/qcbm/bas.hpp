#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qcbm/distribution.hpp"

namespace qcbm {

/// All rows-by-cols images whose rows are each constant (bars) or whose
/// columns are each constant (stripes). Pixels are numbered row-major and
/// pixel 0 is the most significant bit of the returned basis indices, so a
/// pattern's index is the image read row-major as a binary number.
/// Cardinality is 2^rows + 2^cols - 2 (all-zeros/all-ones count once).
std::set<std::uint32_t> bas_patterns(int rows, int cols);

/// Uniform distribution over bas_patterns(rows, cols), zero elsewhere.
Distribution bas_target(int rows, int cols);

} // namespace qcbm
