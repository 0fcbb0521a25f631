#include "multisect/zoo.hpp"

#include "multisect/error.hpp"

namespace multisect {

namespace {

constexpr int kMaxCrossDimension = 24;

std::vector<Corner> coordinate_labels(std::size_t facets, int n) {
  std::vector<Corner> labels;
  labels.reserve(facets * static_cast<std::size_t>(n + 1));
  for (std::size_t f = 0; f < facets; ++f) {
    for (int i = 0; i <= n; ++i) labels.push_back(static_cast<Corner>(i));
  }
  return labels;
}

}  // namespace

Triangulation double_simplex(int n) {
  if (n < 1) throw InputError("double simplex needs n >= 1");
  if (n > 30) throw InputError("dimension must lie in 1..30");
  TriangulationBuilder b(n, 2);
  const Perm id = identity_perm(n + 1);
  for (int i = 0; i <= n; ++i) b.glue(0, i, 1, id);
  return std::move(b).build();
}

Triangulation simplex_boundary(int n) {
  if (n < 1) throw InputError("simplex boundary needs n >= 1");
  std::vector<std::int64_t> ids;
  for (int skip = 0; skip <= n + 1; ++skip) {
    for (int v = 0; v <= n + 1; ++v) {
      if (v != skip) ids.push_back(v);
    }
  }
  return from_vertex_facets(n, std::move(ids));
}

Triangulation cross_sphere(int n) {
  if (n < 1) throw InputError("cross sphere needs n >= 1");
  if (n > kMaxCrossDimension) throw ResourceError("cross sphere too large");
  const std::size_t facets = std::size_t{1} << (n + 1);
  std::vector<std::int64_t> ids;
  ids.reserve(facets * static_cast<std::size_t>(n + 1));
  for (std::size_t s = 0; s < facets; ++s) {
    for (int i = 0; i <= n; ++i) ids.push_back(2 * i + static_cast<std::int64_t>(s >> i & 1U));
  }
  return from_vertex_facets(n, std::move(ids)).with_corner_labels(coordinate_labels(facets, n));
}

Triangulation cross_projective(int n) {
  if (n < 2) throw InputError("cross projective space needs n >= 2");
  if (n > kMaxCrossDimension) throw ResourceError("cross projective space too large");
  const std::size_t full = (std::size_t{1} << (n + 1)) - 1;
  const std::size_t facets = std::size_t{1} << n;
  TriangulationBuilder b(n, facets);
  const Perm id = identity_perm(n + 1);
  // Facet index of sign vector s (bit 0 clear) is s >> 1.
  for (std::size_t s = 0; s <= full; s += 2) {
    for (int i = 0; i <= n; ++i) {
      std::size_t t = s ^ (std::size_t{1} << i);
      if (t & 1U) t = ~t & full;
      b.glue(static_cast<FacetId>(s >> 1), i, static_cast<FacetId>(t >> 1), id);
    }
  }
  return std::move(b).build().with_corner_labels(coordinate_labels(facets, n));
}

}  // namespace multisect
