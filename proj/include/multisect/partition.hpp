#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multisect/cells.hpp"
#include "multisect/permutation.hpp"
#include "multisect/subdivide.hpp"
#include "multisect/triangulation.hpp"
#include "multisect/vertex_partition.hpp"

namespace multisect {

enum class Scheme { OddBary, EvenBary, EvenNpc, Pairs, Explicit };

/// Accepts odd-bary, even-bary, even-npc, pairs, explicit.
Scheme parse_scheme(const std::string& name);
std::string scheme_name(Scheme s);

/// Inputs a scheme may need; which fields are required depends on the
/// scheme.
struct SchemeAux {
  /// Carrier dimensions of the (last) barycentric subdivision.
  std::optional<CarrierLabels> carriers;
  /// Dual two-coloring of the facets of the intermediate subdivision.
  std::optional<std::vector<int>> coloring;
  /// Blocks of corner labels, e.g. {{0,1},{2,3}}.
  std::vector<std::vector<int>> blocks;
  /// Labels per vertex class for the explicit scheme.
  std::optional<VertexPartition> labels;
};

/// Throws PreconditionError for missing or ill-typed aux data and for
/// parity mismatches.
VertexPartition scheme_partition(const Triangulation& t, Scheme scheme, const SchemeAux& aux);

/// Parses "0,1/2,3/4" into blocks.
std::vector<std::vector<int>> parse_blocks(const std::string& text);

/// Partition of the join: classes of A, then those of B shifted past them.
/// When both dimensions are even the two singleton-carrying top classes
/// merge into one class.
VertexPartition join_partition(const Triangulation& a, const VertexPartition& pa, const Triangulation& b,
                               const VertexPartition& pb, const Triangulation& joined);

struct ClassGraph {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool connected = false;
};

struct SubsetReport {
  std::uint32_t mask = 0;
  std::vector<int> classes;
  bool nonempty = false;
  bool connected = false;
  /// Largest cell dimension before collapsing (-1 when empty).
  int dimension = -1;
  /// Dimension reached by greedy collapse.
  int collapsed_dimension = -1;
  std::vector<std::size_t> counts;
};

struct ValidationReport {
  int n = 0;
  int k = 0;
  bool profile_ok = false;
  /// Per facet: corner count in each class.
  std::vector<std::vector<int>> profiles;
  std::vector<ClassGraph> class_graphs;
  /// Ordered by subset size, then by mask.
  std::vector<SubsetReport> subsets;
  bool central_closed = false;
  bool central_connected = false;
  bool supports_multisection = false;
  bool supports_generalized = false;
  std::vector<std::string> diagnostics;

  const SubsetReport& subset(std::uint32_t mask) const;
};

inline constexpr int kMaxClassesForSubsets = 15;

ValidationReport validate(std::shared_ptr<const Ambient> ambient);
ValidationReport validate(const Triangulation& t, const VertexPartition& p);

/// Spine dimension bound for the intersection of r of the k+1 pieces of a
/// multisection of an n-manifold.
int multisection_spine_bound(int n, int k, int r);

struct SymRep {
  FacetId base = 0;
  bool trivial = false;
  /// Label of each (facet, corner), propagated over a breadth-first dual
  /// spanning tree; a global labeling when trivial.
  std::vector<Corner> labeling;
  /// One permutation of labels per non-tree dual edge that is not the
  /// identity, deduplicated and sorted.
  std::vector<Perm> generators;
  /// Orbits of the generated group on 0..n, each ascending.
  std::vector<std::vector<int>> orbits;
};

/// Throws PreconditionError("symmetric representation undefined: ...") for
/// non-even or disconnected input.
SymRep symmetric_representation(const Triangulation& t);

struct LabelingCover {
  Triangulation triangulation;
  std::size_t degree = 1;
  /// Facet of the input each cover facet lies over.
  std::vector<FacetId> projection;
};

LabelingCover labeling_cover(const Triangulation& t);

struct Admissibility {
  bool admissible = false;
  /// Per generator: image block of each block (empty when not admissible).
  std::vector<std::vector<int>> block_action;
  bool block_action_trivial = false;
  /// Union of the monochromatic edges of all blocks connects every vertex.
  bool union_graph_connected = false;
  std::string reason;
};

/// block_of_label assigns each label 0..n a block 0..b-1. Throws
/// PreconditionError when it is not a labeling of R's alphabet.
Admissibility twisted_admissible(const Triangulation& t, const std::vector<int>& block_of_label, const SymRep& r);

}  // namespace multisect
