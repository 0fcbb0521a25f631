#include "multisect/gf2.hpp"

#include <algorithm>
#include <iterator>

namespace multisect {

void normalize(SparseColumn& column) {
  std::sort(column.begin(), column.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < column.size();) {
    if (i + 1 < column.size() && column[i] == column[i + 1]) {
      i += 2;
    } else {
      column[out++] = column[i++];
    }
  }
  column.resize(out);
}

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

// Standard low-pivot reduction. Returns the rank; pivot_rows receives the
// pivot row of every column that stayed nonzero. Columns flagged in skip are
// known to reduce to zero and are not touched.
std::size_t reduce(std::vector<SparseColumn>& columns, const std::vector<char>& skip,
                   std::vector<std::uint32_t>& pivot_rows) {
  std::uint32_t rows = 0;
  for (const auto& c : columns) {
    if (!c.empty()) rows = std::max(rows, c.back() + 1);
  }
  std::vector<std::uint32_t> owner(rows, kNone);
  SparseColumn scratch;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    auto& col = columns[j];
    while (!col.empty() && owner[col.back()] != kNone) {
      const auto& other = columns[owner[col.back()]];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner[col.back()] = static_cast<std::uint32_t>(j);
      pivot_rows.push_back(col.back());
      ++rank;
    }
  }
  return rank;
}

}  // namespace

std::size_t gf2_rank(std::vector<SparseColumn> columns) {
  std::vector<std::uint32_t> pivots;
  return reduce(columns, {}, pivots);
}

std::vector<std::size_t> gf2_betti(const std::vector<std::size_t>& counts,
                                   std::vector<std::vector<SparseColumn>> boundaries) {
  const std::size_t top = counts.size();
  std::vector<std::size_t> rank(top + 1, 0);
  std::vector<char> skip;
  // Top dimension first: pivot rows of ∂_{d+1} are d-cells whose ∂_d column
  // reduces to zero.
  for (std::size_t d = top; d-- > 1;) {
    std::vector<std::uint32_t> pivots;
    if (d < boundaries.size()) {
      rank[d] = reduce(boundaries[d], skip, pivots);
    }
    skip.assign(counts[d - 1], 0);
    for (std::uint32_t r : pivots) skip[r] = 1;
  }
  std::vector<std::size_t> betti(top, 0);
  for (std::size_t d = 0; d < top; ++d) {
    betti[d] = counts[d] - rank[d] - rank[d + 1];
  }
  return betti;
}

}  // namespace multisect
