#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "multisect/permutation.hpp"

namespace multisect {

using FacetId = std::uint32_t;

inline constexpr FacetId kUnglued = ~FacetId{0};

/// Upper bounds applied by constructions whose output size grows quickly.
struct Limits {
  std::uint64_t max_facets = 100'000'000ULL;
};

/// A closed generalized triangulation: n-simplices glued in pairs along
/// codimension-one faces.
///
/// Slot i of facet f holds (t, π): the face of f opposite corner i is glued
/// to the face of t opposite corner π(i), with corner j of f sent to corner
/// π(j) of t. Instances are immutable and validated on construction.
class Triangulation {
 public:
  /// Throws InputError when the gluing data is not a closed, involutive,
  /// self-face-free pairing of facet faces.
  Triangulation(int dimension, std::vector<FacetId> targets, std::vector<Corner> perms,
                std::vector<std::int64_t> vertex_ids = {});

  int dimension() const noexcept { return dim_; }
  int corners() const noexcept { return dim_ + 1; }
  std::size_t size() const noexcept { return targets_.size() / static_cast<std::size_t>(dim_ + 1); }

  FacetId target(FacetId f, int slot) const noexcept {
    return targets_[static_cast<std::size_t>(f) * static_cast<std::size_t>(dim_ + 1) +
                    static_cast<std::size_t>(slot)];
  }

  std::span<const Corner> gluing(FacetId f, int slot) const noexcept {
    const auto c = static_cast<std::size_t>(dim_ + 1);
    return {perms_.data() + (static_cast<std::size_t>(f) * c + static_cast<std::size_t>(slot)) * c, c};
  }

  /// True when the triangulation was given as vertex tuples.
  bool has_vertex_ids() const noexcept { return !vertex_ids_.empty(); }

  std::span<const std::int64_t> facet_vertices(FacetId f) const noexcept {
    const auto c = static_cast<std::size_t>(dim_ + 1);
    return {vertex_ids_.data() + static_cast<std::size_t>(f) * c, c};
  }

  /// Optional coordinate labeling: one label in 0..n per (facet, corner).
  const std::vector<Corner>& corner_labels() const noexcept { return corner_labels_; }
  Triangulation with_corner_labels(std::vector<Corner> labels) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.dim_ == b.dim_ && a.targets_ == b.targets_ && a.perms_ == b.perms_ &&
           a.vertex_ids_ == b.vertex_ids_;
  }

 private:
  int dim_;
  std::vector<FacetId> targets_;
  std::vector<Corner> perms_;
  std::vector<std::int64_t> vertex_ids_;
  std::vector<Corner> corner_labels_;
};

/// Incremental assembly of a Triangulation; each glue() call sets both sides.
class TriangulationBuilder {
 public:
  TriangulationBuilder(int dimension, std::size_t facets);

  void glue(FacetId f, int slot, FacetId t, std::span<const Corner> perm);
  void set_vertex_ids(std::vector<std::int64_t> ids) { vertex_ids_ = std::move(ids); }

  Triangulation build() &&;

 private:
  int dim_;
  std::vector<FacetId> targets_;
  std::vector<Corner> perms_;
  std::vector<std::int64_t> vertex_ids_;
};

/// Builds a triangulation from vertex tuples, pairing facets along equal
/// codimension-one vertex sets.
Triangulation from_vertex_facets(int dimension, std::vector<std::int64_t> ids);

}  // namespace multisect
