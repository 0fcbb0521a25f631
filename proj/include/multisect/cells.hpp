#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multisect/face_poset.hpp"
#include "multisect/triangulation.hpp"
#include "multisect/vertex_partition.hpp"

namespace multisect {

/// Shared read-only context for every cell complex cut from one
/// triangulation and partition.
struct Ambient {
  Triangulation triangulation;
  FacePoset poset;
  VertexPartition partition;
};

/// Validates that the partition covers the vertex classes; throws
/// PreconditionError otherwise.
std::shared_ptr<const Ambient> make_ambient(Triangulation t, VertexPartition p);

/// A cell: the ambient face class (dimension, index) it is cut from.
struct CellRef {
  int face_dim;
  std::uint32_t face;
};

/// One codimension-one face of a cell.
struct CellFacet {
  std::uint32_t cell;
  /// Vertex class deleted from the cell's face to reach it.
  std::uint32_t deleted;
};

/// Pullback cells with support exactly a class subset S. A face with
/// multiplicities m_c contributes a product of simplices of dimension
/// Σ (m_c - 1).
class CellComplex {
 public:
  CellComplex(std::shared_ptr<const Ambient> ambient, std::uint32_t subset,
              std::vector<std::vector<CellRef>> cells);

  const Ambient& ambient() const noexcept { return *ambient_; }
  std::shared_ptr<const Ambient> ambient_ptr() const noexcept { return ambient_; }
  std::uint32_t subset() const noexcept { return subset_; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int d) const noexcept { return cells_[static_cast<std::size_t>(d)].size(); }
  std::vector<std::size_t> counts() const;
  std::size_t total() const;
  bool empty() const noexcept { return cells_.empty(); }
  bool all_cubes() const noexcept { return all_cubes_; }

  const CellRef& cell(int d, std::uint32_t i) const noexcept { return cells_[static_cast<std::size_t>(d)][i]; }
  FaceKey key(int d, std::uint32_t i) const;
  /// Codimension-one faces with multiplicity, in corner order of the
  /// canonical incarnation.
  std::span<const CellFacet> facets(int d, std::uint32_t i) const noexcept;
  /// Index of the cell cut from an ambient face class, if any.
  std::optional<std::uint32_t> find(int face_dim, std::uint32_t face) const;
  /// Vertex classes of the cell's face, grouped by partition class
  /// ascending and vertex class ascending within a class.
  std::vector<std::vector<std::uint32_t>> factors(int d, std::uint32_t i) const;

 private:
  std::shared_ptr<const Ambient> ambient_;
  std::uint32_t subset_;
  std::vector<std::vector<CellRef>> cells_;
  std::vector<std::vector<std::uint32_t>> offsets_;
  std::vector<std::vector<CellFacet>> facets_;
  int face_offset_;
  bool all_cubes_ = true;
};

/// Cells with support exactly S. With max_multiplicity = 2 only cube
/// cells are kept; 0 keeps every multiplicity. Throws PreconditionError for
/// an empty or out-of-range subset.
CellComplex extract(std::shared_ptr<const Ambient> ambient, std::uint32_t subset, int max_multiplicity = 0);

struct CellSummary {
  int dimension = -1;
  std::vector<std::size_t> counts;
  std::int64_t euler = 0;
  bool connected = false;
  bool closed = false;
  std::vector<std::size_t> betti;
  /// Set only for closed complexes whose cells have distinct vertices in
  /// every factor.
  std::optional<bool> orientable;
};

CellSummary cell_summary(const CellComplex& c);

/// Link of a vertex cell: its vertices are the edge cells at the vertex and
/// its simplices the corners of higher cells.
struct VertexLink {
  std::vector<std::uint32_t> vertices;
  /// simplices[h] lists h-simplices as ascending positions in vertices,
  /// one per corner, so a non-simplicial link keeps its repeats.
  std::vector<std::vector<std::vector<std::uint32_t>>> simplices;
  bool simplicial = true;
  std::string defect;
};

/// Throws PreconditionError for non-cube complexes and InputError for an
/// unknown vertex.
VertexLink vertex_link(const CellComplex& c, std::uint32_t vertex);

struct NpcReport {
  bool pass = true;
  std::optional<std::uint32_t> vertex;
  std::vector<std::uint32_t> clique;
  std::string reason;
};

/// Gromov's link condition at every vertex.
NpcReport npc_check(const CellComplex& c);

struct Collapse {
  CellComplex complex;
  int dimension;
};

/// Greedy elementary collapses to a fixed point. Free faces are taken top
/// dimension first, ascending cell index within a dimension.
Collapse collapse(const CellComplex& c);

/// E - V + 1 of a connected complex of dimension at most one.
std::int64_t graph_genus(const CellComplex& c);

/// Connected components of the 1-skeleton (0 for an empty complex).
std::size_t components(const CellComplex& c);

}  // namespace multisect
