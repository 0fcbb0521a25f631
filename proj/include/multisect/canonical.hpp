#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multisect/triangulation.hpp"

namespace multisect {

/// Text that two triangulations share exactly when they are combinatorially
/// isomorphic (facet renumbering plus per-facet corner relabeling). Costs
/// O(m² · (n+1)! · (n+1)) per component, so meant for small inputs.
std::string isomorphism_signature(const Triangulation& t);

using Simplex = std::vector<std::uint32_t>;

/// Canonical form of a multiset of simplices on vertices 0..vertices-1
/// under vertex relabeling: the lexicographically least sorted relabeled
/// list. Brute force over relabelings that respect vertex degrees.
std::vector<Simplex> canonical_simplices(std::size_t vertices, const std::vector<Simplex>& simplices);

}  // namespace multisect
