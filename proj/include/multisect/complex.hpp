#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "multisect/face_poset.hpp"
#include "multisect/triangulation.hpp"

namespace multisect {

struct TriSummary {
  std::vector<std::size_t> counts;
  std::int64_t euler = 0;
  bool connected = false;
  bool pseudo_manifold = false;
  bool orientable = false;
  bool even = false;
  std::vector<std::size_t> betti;
  /// ±1 per facet when orientable, empty otherwise.
  std::vector<int> orientation;
};

TriSummary summarize(const Triangulation& t, const FacePoset& poset);
TriSummary summarize(const Triangulation& t);

/// Consistent ±1 facet orientations (o_t = -sgn(π)·o_f across every
/// gluing), or nullopt when none exists.
std::optional<std::vector<int>> facet_orientation(const Triangulation& t);

/// Alternating sum of face counts.
std::int64_t euler_characteristic(const std::vector<std::size_t>& counts);

/// True when every codimension-2 face class has an even number of
/// incarnations.
bool is_even(const FacePoset& poset);

struct Link {
  Triangulation triangulation;
  /// Link facet j comes from this incarnation of the face in the star.
  std::vector<FaceKey> source;
};

/// Link of the face class containing the given incarnation. Throws
/// InputError for a key outside the triangulation and PreconditionError when
/// the link would have dimension below 1.
Link link(const Triangulation& t, const FacePoset& poset, FaceKey face);

struct DualGraph {
  std::size_t nodes = 0;
  /// One edge per codimension-1 face class.
  std::vector<std::pair<FacetId, FacetId>> edges;
  bool connected = false;
  /// Two-coloring (0/1 per facet) when bipartite.
  std::optional<std::vector<int>> coloring;
};

DualGraph dual_graph(const Triangulation& t);

/// Number of connected components of the dual graph.
std::size_t dual_components(const Triangulation& t);

struct DoubleCover {
  Triangulation triangulation;
  /// Deck involution as a facet pairing: deck[f] is the other lift.
  std::vector<FacetId> deck;
};

/// Facet (f, s) of the cover has index f + s·m.
DoubleCover orientation_double_cover(const Triangulation& t);

}  // namespace multisect
