// Independent reference computations for the unit and acceptance tests.
// These deliberately avoid the library's union-find, sparse elimination and
// cell-complex code paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "multisect/cells.hpp"
#include "multisect/complex.hpp"
#include "multisect/face_poset.hpp"
#include "multisect/triangulation.hpp"

namespace oracle {

using multisect::Corner;
using multisect::FacetId;
using multisect::Triangulation;

/// Face classes found by breadth-first search over (facet, corner-set)
/// pairs. Class ids are assigned per dimension in discovery order.
struct NaiveFaces {
  std::vector<std::size_t> counts;
  std::map<std::pair<FacetId, std::uint32_t>, std::uint32_t> class_of;
};

inline std::uint32_t image_mask(const Triangulation& t, FacetId f, int slot, std::uint32_t mask) {
  const auto p = t.gluing(f, slot);
  std::uint32_t out = 0;
  for (int c = 0; c < t.corners(); ++c) {
    if (mask >> c & 1U) out |= 1U << p[static_cast<std::size_t>(c)];
  }
  return out;
}

inline NaiveFaces naive_faces(const Triangulation& t) {
  NaiveFaces out;
  const int c = t.corners();
  out.counts.assign(static_cast<std::size_t>(c), 0);
  for (FacetId f = 0; f < t.size(); ++f) {
    for (std::uint32_t mask = 1; mask < (1U << c); ++mask) {
      if (out.class_of.count({f, mask})) continue;
      const auto d = static_cast<std::size_t>(__builtin_popcount(mask) - 1);
      const auto id = static_cast<std::uint32_t>(out.counts[d]++);
      std::queue<std::pair<FacetId, std::uint32_t>> todo;
      todo.push({f, mask});
      out.class_of[{f, mask}] = id;
      while (!todo.empty()) {
        const auto [g, m] = todo.front();
        todo.pop();
        for (int slot = 0; slot < c; ++slot) {
          if (m >> slot & 1U) continue;
          const std::pair<FacetId, std::uint32_t> next{t.target(g, slot), image_mask(t, g, slot, m)};
          if (out.class_of.emplace(next, id).second) todo.push(next);
        }
      }
    }
  }
  return out;
}

/// Rank over GF(2) of a dense 0/1 matrix by row reduction.
inline std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (std::size_t x = col; x < cols; ++x) rows[r][x] ^= rows[rank][x];
      }
    }
    ++rank;
  }
  return rank;
}

/// GF(2) Betti numbers from the naive face classes and dense boundary
/// matrices.
inline std::vector<std::size_t> naive_betti(const Triangulation& t) {
  const NaiveFaces faces = naive_faces(t);
  const int n = t.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 2), 0);
  for (int d = 1; d <= n; ++d) {
    std::vector<std::vector<std::uint8_t>> rows(faces.counts[static_cast<std::size_t>(d)],
                                                std::vector<std::uint8_t>(faces.counts[static_cast<std::size_t>(d - 1)], 0));
    std::set<std::uint32_t> seen;
    for (const auto& [inc, cls] : faces.class_of) {
      if (__builtin_popcount(inc.second) != d + 1 || !seen.insert(cls).second) continue;
      for (int corner = 0; corner < t.corners(); ++corner) {
        if (!(inc.second >> corner & 1U)) continue;
        const std::uint32_t below = faces.class_of.at({inc.first, inc.second & ~(1U << corner)});
        rows[cls][below] ^= 1;
      }
    }
    ranks[static_cast<std::size_t>(d)] = dense_rank(rows);
  }
  std::vector<std::size_t> betti;
  for (int d = 0; d <= n; ++d) {
    betti.push_back(faces.counts[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d)] -
                    ranks[static_cast<std::size_t>(d + 1)]);
  }
  return betti;
}

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t v = 1;
  for (int i = 1; i <= r; ++i) v = v * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return v;
}

/// Face counts of the crosspolytope boundary: a d-face picks d+1 of the n+1
/// coordinates and a sign for each.
inline std::vector<std::size_t> orthant_counts(int n) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= n; ++d) out.push_back(binomial(n + 1, d + 1) << (d + 1));
  return out;
}

/// Same for the antipodal quotient, whose action on faces is free.
inline std::vector<std::size_t> projective_orthant_counts(int n) {
  std::vector<std::size_t> out;
  for (std::size_t v : orthant_counts(n)) out.push_back(v / 2);
  return out;
}

/// Simplices of the link of a rainbow face, read off the ambient link
/// triangulation and expressed through the central complex's edge cells.
/// The face of the link spanned by link corners F corresponds to the
/// ambient face Δ ∪ F; each of its link vertices v is the edge cell Δ ∪ {v}.
inline std::vector<std::vector<std::uint32_t>> ambient_rainbow_link(const multisect::CellComplex& central,
                                                                    std::uint32_t vertex_cell) {
  const auto& amb = central.ambient();
  const multisect::FaceKey delta = central.key(0, vertex_cell);
  const multisect::Link lk = multisect::link(amb.triangulation, amb.poset, delta);
  const multisect::FacePoset lp(lk.triangulation);
  const int face_dim = __builtin_popcount(delta.mask) - 1;
  std::vector<std::vector<std::uint32_t>> out;
  for (int h = 0; h <= lk.triangulation.dimension(); ++h) {
    for (std::uint32_t cls = 0; cls < lp.count(h); ++cls) {
      const multisect::FaceKey k = lp.key(h, cls);
      const multisect::FaceKey src = lk.source[k.facet];
      std::vector<int> complement;
      for (int c = 0; c < amb.triangulation.corners(); ++c) {
        if (!(src.mask >> c & 1U)) complement.push_back(c);
      }
      std::vector<std::uint32_t> simplex;
      for (int c = 0; c < lk.triangulation.corners(); ++c) {
        if (!(k.mask >> c & 1U)) continue;
        const std::uint32_t edge_mask = src.mask | (1U << complement[static_cast<std::size_t>(c)]);
        const auto edge_face = amb.poset.class_of(src.facet, edge_mask);
        const auto edge_cell = central.find(face_dim + 1, edge_face);
        simplex.push_back(edge_cell ? *edge_cell : ~0U);
      }
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The library's vertex link rewritten with edge-cell ids as vertices.
inline std::vector<std::vector<std::uint32_t>> cube_link_simplices(const multisect::VertexLink& vl) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t h = 0; h < vl.simplices.size(); ++h) {
    for (const auto& s : vl.simplices[h]) {
      std::vector<std::uint32_t> simplex;
      for (std::uint32_t pos : s) simplex.push_back(vl.vertices[pos]);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Degree of every vertex cell counted directly from edge-cell factors.
inline std::vector<std::size_t> vertex_degrees(const multisect::CellComplex& c) {
  std::vector<std::size_t> deg(c.count(0), 0);
  if (c.dimension() < 1) return deg;
  for (std::uint32_t e = 0; e < c.count(1); ++e) {
    for (const auto& f : c.facets(1, e)) ++deg[f.cell];
  }
  return deg;
}

}  // namespace oracle
