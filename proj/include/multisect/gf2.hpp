#pragma once

#include <cstdint>
#include <vector>

namespace multisect {

/// A GF(2) column: ascending row indices of its nonzero entries.
using SparseColumn = std::vector<std::uint32_t>;

/// Sorts and cancels repeated rows in pairs.
void normalize(SparseColumn& column);

/// Rank over GF(2) of the matrix with the given columns.
std::size_t gf2_rank(std::vector<SparseColumn> columns);

/// GF(2) Betti numbers of a chain complex. counts[d] is the number of
/// d-cells; boundaries[d] (d ≥ 1) holds the normalized boundary column of
/// every d-cell; boundaries[0] is ignored.
std::vector<std::size_t> gf2_betti(const std::vector<std::size_t>& counts,
                                   std::vector<std::vector<SparseColumn>> boundaries);

}  // namespace multisect
