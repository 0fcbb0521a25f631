#include "multisect/triangulation.hpp"

#include <algorithm>
#include <string>

#include "multisect/error.hpp"

namespace multisect {

namespace {

std::string slot_name(std::size_t f, int slot) {
  return "facet " + std::to_string(f) + " slot " + std::to_string(slot);
}

}  // namespace

Triangulation::Triangulation(int dimension, std::vector<FacetId> targets, std::vector<Corner> perms,
                             std::vector<std::int64_t> vertex_ids)
    : dim_(dimension), targets_(std::move(targets)), perms_(std::move(perms)), vertex_ids_(std::move(vertex_ids)) {
  if (dim_ < 1 || dim_ > 30) throw InputError("dimension must lie in 1..30");
  const auto c = static_cast<std::size_t>(dim_ + 1);
  if (targets_.size() % c != 0 || targets_.empty()) throw InputError("dimension mismatch in gluing table");
  if (perms_.size() != targets_.size() * c) throw InputError("dimension mismatch in gluing permutations");
  if (!vertex_ids_.empty() && vertex_ids_.size() != targets_.size()) {
    throw InputError("dimension mismatch in vertex identifiers");
  }
  const std::size_t m = size();
  for (std::size_t f = 0; f < m; ++f) {
    for (int i = 0; i < corners(); ++i) {
      const FacetId t = target(static_cast<FacetId>(f), i);
      if (t == kUnglued) throw InputError("unglued slot: " + slot_name(f, i));
      if (t >= m) throw InputError("gluing target out of range: " + slot_name(f, i));
      const auto p = gluing(static_cast<FacetId>(f), i);
      if (!is_permutation(p)) throw InputError("gluing is not a corner bijection: " + slot_name(f, i));
      const int back = p[static_cast<std::size_t>(i)];
      if (t == f && back == i) throw InputError("self-identified face: " + slot_name(f, i));
      if (target(t, back) != f) throw InputError("gluing involution violated at " + slot_name(f, i));
      const auto q = gluing(t, back);
      for (std::size_t j = 0; j < c; ++j) {
        if (q[p[j]] != j) throw InputError("gluing involution violated at " + slot_name(f, i));
      }
    }
  }
}

Triangulation Triangulation::with_corner_labels(std::vector<Corner> labels) const {
  if (!labels.empty() && labels.size() != targets_.size()) {
    throw InputError("corner labeling size does not match the triangulation");
  }
  for (Corner l : labels) {
    if (l > dim_) throw InputError("corner label out of range");
  }
  Triangulation out = *this;
  out.corner_labels_ = std::move(labels);
  return out;
}

TriangulationBuilder::TriangulationBuilder(int dimension, std::size_t facets)
    : dim_(dimension),
      targets_(facets * static_cast<std::size_t>(dimension + 1), kUnglued),
      perms_(facets * static_cast<std::size_t>(dimension + 1) * static_cast<std::size_t>(dimension + 1), 0) {}

void TriangulationBuilder::glue(FacetId f, int slot, FacetId t, std::span<const Corner> perm) {
  const auto c = static_cast<std::size_t>(dim_ + 1);
  const std::size_t here = static_cast<std::size_t>(f) * c + static_cast<std::size_t>(slot);
  const std::size_t there = static_cast<std::size_t>(t) * c + perm[static_cast<std::size_t>(slot)];
  targets_[here] = t;
  targets_[there] = f;
  for (std::size_t j = 0; j < c; ++j) {
    perms_[here * c + j] = perm[j];
    perms_[there * c + perm[j]] = static_cast<Corner>(j);
  }
}

Triangulation TriangulationBuilder::build() && {
  return Triangulation(dim_, std::move(targets_), std::move(perms_), std::move(vertex_ids_));
}

Triangulation from_vertex_facets(int dimension, std::vector<std::int64_t> ids) {
  if (dimension < 1 || dimension > 30) throw InputError("dimension must lie in 1..30");
  const auto c = static_cast<std::size_t>(dimension + 1);
  if (ids.empty() || ids.size() % c != 0) throw InputError("dimension mismatch in vertex facets");
  const std::size_t m = ids.size() / c;

  struct Ridge {
    std::vector<std::int64_t> key;
    FacetId facet;
    int slot;
  };
  std::vector<Ridge> ridges;
  ridges.reserve(m * c);
  for (std::size_t f = 0; f < m; ++f) {
    std::vector<std::int64_t> verts(ids.begin() + static_cast<std::ptrdiff_t>(f * c),
                                    ids.begin() + static_cast<std::ptrdiff_t>((f + 1) * c));
    std::vector<std::int64_t> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("facet " + std::to_string(f) + " repeats a vertex");
    }
    for (std::size_t i = 0; i < c; ++i) {
      std::vector<std::int64_t> key;
      key.reserve(c - 1);
      for (std::int64_t v : sorted) {
        if (v != verts[i]) key.push_back(v);
      }
      ridges.push_back({std::move(key), static_cast<FacetId>(f), static_cast<int>(i)});
    }
  }
  std::sort(ridges.begin(), ridges.end(), [](const Ridge& a, const Ridge& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.facet != b.facet) return a.facet < b.facet;
    return a.slot < b.slot;
  });

  TriangulationBuilder builder(dimension, m);
  for (std::size_t r = 0; r < ridges.size();) {
    std::size_t e = r;
    while (e < ridges.size() && ridges[e].key == ridges[r].key) ++e;
    if (e - r == 1) {
      throw InputError("unglued slot: facet " + std::to_string(ridges[r].facet) + " slot " +
                       std::to_string(ridges[r].slot));
    }
    if (e - r > 2) throw InputError("codimension-1 face shared by more than two facets");
    const Ridge& a = ridges[r];
    const Ridge& b = ridges[r + 1];
    Perm perm(c);
    for (std::size_t j = 0; j < c; ++j) {
      if (static_cast<int>(j) == a.slot) {
        perm[j] = static_cast<Corner>(b.slot);
        continue;
      }
      const std::int64_t v = ids[a.facet * c + j];
      for (std::size_t k = 0; k < c; ++k) {
        if (ids[b.facet * c + k] == v) perm[j] = static_cast<Corner>(k);
      }
    }
    builder.glue(a.facet, a.slot, b.facet, perm);
    r = e;
  }
  builder.set_vertex_ids(std::move(ids));
  return std::move(builder).build();
}

}  // namespace multisect
