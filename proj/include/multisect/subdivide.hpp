#pragma once

#include <cstdint>
#include <vector>

#include "multisect/triangulation.hpp"
#include "multisect/vertex_partition.hpp"

namespace multisect {

/// Per vertex class of a barycentric subdivision: the dimension of the
/// input face it is the barycentre of, and for barycentres of facets the
/// input facet index (-1 otherwise).
struct CarrierLabels {
  std::vector<int> dim;
  std::vector<std::int64_t> top_facet;
};

struct Subdivision {
  Triangulation triangulation;
  CarrierLabels carriers;
};

/// First barycentric subdivision. Facet (f, σ) has index f·(n+1)! + rank(σ)
/// and its corner j is the barycentre of the face σ(0..j) of f. Throws
/// ResourceError("subdivision too large") past the facet ceiling.
Subdivision barycentric(const Triangulation& t, const Limits& limits = {});

struct PachnerResult {
  Triangulation triangulation;
  VertexPartition partition;
};

/// Replaces every double simplex (two facets glued along their class-k-free
/// faces, n = 2k) by n facets around the edge joining the two class-k apexes.
PachnerResult pachner_2n_pass(const Triangulation& t, const VertexPartition& p);

/// Cones facet f off a new vertex. The new facet replacing corner j sits at
/// index f for j = 0 and at m + j - 1 otherwise.
Triangulation stellar_facet(const Triangulation& t, FacetId f);

/// Join of two vertex-format triangulations. Vertices of A are relabeled
/// 0..a-1 in increasing id order, then those of B follow.
Triangulation join(const Triangulation& a, const Triangulation& b);

}  // namespace multisect
