#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "multisect/triangulation.hpp"

namespace multisect {

/// One incarnation of a face: a facet and the subset of its corners.
struct FaceKey {
  FacetId facet = 0;
  std::uint32_t mask = 0;

  friend bool operator==(const FaceKey&, const FaceKey&) = default;
};

/// Orders by facet, then lexicographically by the sorted corner list.
bool key_less(FaceKey a, FaceKey b);

/// "f:c0,c1,..." with corners ascending.
std::string format_key(FaceKey key);
/// Inverse of format_key; throws InputError on malformed text.
FaceKey parse_key(const std::string& text);

/// Vertex classes only: the cheap part of the face poset.
class VertexClasses {
 public:
  explicit VertexClasses(const Triangulation& t);

  std::uint32_t of(FacetId f, int corner) const noexcept {
    return table_[static_cast<std::size_t>(f) * static_cast<std::size_t>(corners_) +
                  static_cast<std::size_t>(corner)];
  }
  std::size_t count() const noexcept { return keys_.size(); }
  /// Canonical (lexicographically least) incarnation of a class.
  FaceKey key(std::uint32_t cls) const noexcept { return keys_[cls]; }
  std::span<const std::uint32_t> table() const noexcept { return table_; }

 private:
  int corners_;
  std::vector<std::uint32_t> table_;
  std::vector<FaceKey> keys_;
};

/// All face classes of a triangulation, grouped by dimension and sorted by
/// canonical key.
class FacePoset {
 public:
  /// Throws ResourceError when facets · 2^(n+1) exceeds the indexing range.
  explicit FacePoset(const Triangulation& t);

  int dimension() const noexcept { return dim_; }
  std::size_t facet_count() const noexcept { return facets_; }
  std::size_t count(int d) const noexcept { return keys_[static_cast<std::size_t>(d)].size(); }
  std::vector<std::size_t> counts() const;

  /// Class index (within dimension popcount(mask)-1) of an incarnation.
  std::uint32_t class_of(FacetId f, std::uint32_t mask) const noexcept {
    return class_of_[(static_cast<std::size_t>(f) << corners_) | mask];
  }
  std::uint32_t vertex_of(FacetId f, int corner) const noexcept { return class_of(f, 1U << corner); }

  FaceKey key(int d, std::uint32_t cls) const noexcept { return keys_[static_cast<std::size_t>(d)][cls]; }
  std::span<const FaceKey> incarnations(int d, std::uint32_t cls) const noexcept;

  /// Codimension-one faces of the canonical incarnation, with multiplicity.
  std::vector<std::uint32_t> faces(int d, std::uint32_t cls) const;
  /// Distinct classes of dimension d+1 containing the class.
  std::span<const std::uint32_t> cofaces(int d, std::uint32_t cls) const noexcept;

  /// Vertex classes of the canonical incarnation, in corner order.
  std::vector<std::uint32_t> vertices(int d, std::uint32_t cls) const;

  /// Looks a class up by any of its incarnations.
  std::uint32_t find(FaceKey key) const noexcept { return class_of(key.facet, key.mask); }

 private:
  int dim_;
  int corners_;
  std::size_t facets_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<FaceKey>> keys_;
  std::vector<std::vector<std::uint32_t>> inc_offsets_;
  std::vector<std::vector<FaceKey>> incarnations_;
  std::vector<std::vector<std::uint32_t>> up_offsets_;
  std::vector<std::vector<std::uint32_t>> up_;
};

/// True when every face has distinct vertices and is determined by its
/// vertex set.
bool is_simplicial(const FacePoset& poset);

}  // namespace multisect
