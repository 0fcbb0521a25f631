#include "multisect/complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

#include "multisect/error.hpp"
#include "multisect/gf2.hpp"
#include "multisect/union_find.hpp"

namespace multisect {

std::int64_t euler_characteristic(const std::vector<std::size_t>& counts) {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    const auto c = static_cast<std::int64_t>(counts[d]);
    chi += (d % 2 == 0) ? c : -c;
  }
  return chi;
}

bool is_even(const FacePoset& poset) {
  const int d = poset.dimension() - 2;
  if (d < 0) return true;
  for (std::uint32_t cls = 0; cls < poset.count(d); ++cls) {
    if (poset.incarnations(d, cls).size() % 2 != 0) return false;
  }
  return true;
}

std::optional<std::vector<int>> facet_orientation(const Triangulation& t) {
  const std::size_t m = t.size();
  std::vector<int> o(m, 0);
  for (std::size_t root = 0; root < m; ++root) {
    if (o[root] != 0) continue;
    o[root] = 1;
    std::deque<FacetId> queue{static_cast<FacetId>(root)};
    while (!queue.empty()) {
      const FacetId f = queue.front();
      queue.pop_front();
      for (int i = 0; i < t.corners(); ++i) {
        const FacetId g = t.target(f, i);
        const int want = -sign(t.gluing(f, i)) * o[f];
        if (o[g] == 0) {
          o[g] = want;
          queue.push_back(g);
        } else if (o[g] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return o;
}

std::size_t dual_components(const Triangulation& t) {
  UnionFind uf(t.size());
  for (FacetId f = 0; f < t.size(); ++f) {
    for (int i = 0; i < t.corners(); ++i) uf.unite(f, t.target(f, i));
  }
  return uf.components();
}

TriSummary summarize(const Triangulation& t, const FacePoset& poset) {
  TriSummary s;
  s.counts = poset.counts();
  s.euler = euler_characteristic(s.counts);

  UnionFind by_vertex(t.size() + poset.count(0));
  for (FacetId f = 0; f < t.size(); ++f) {
    for (int c = 0; c < t.corners(); ++c) {
      by_vertex.unite(f, static_cast<std::uint32_t>(t.size() + poset.vertex_of(f, c)));
    }
  }
  s.connected = t.size() > 0 && by_vertex.components() == 1;
  s.pseudo_manifold = t.size() > 0 && dual_components(t) == 1;

  auto o = facet_orientation(t);
  s.orientable = o.has_value();
  if (o) s.orientation = std::move(*o);
  s.even = is_even(poset);

  std::vector<std::vector<SparseColumn>> boundaries(s.counts.size());
  for (int d = 1; d <= poset.dimension(); ++d) {
    auto& cols = boundaries[static_cast<std::size_t>(d)];
    cols.resize(poset.count(d));
    for (std::uint32_t cls = 0; cls < poset.count(d); ++cls) {
      cols[cls] = poset.faces(d, cls);
      normalize(cols[cls]);
    }
  }
  s.betti = gf2_betti(s.counts, std::move(boundaries));
  return s;
}

TriSummary summarize(const Triangulation& t) { return summarize(t, FacePoset(t)); }

Link link(const Triangulation& t, const FacePoset& poset, FaceKey face) {
  const std::uint32_t full = (1U << t.corners()) - 1;
  if (face.facet >= t.size() || face.mask == 0 || (face.mask & ~full) != 0) {
    throw InputError("unknown face key " + format_key(face));
  }
  const int d = std::popcount(face.mask) - 1;
  const int link_dim = t.dimension() - d - 1;
  if (link_dim < 1) throw PreconditionError("link dimension must be at least 1");

  const std::uint32_t cls = poset.find(face);
  const auto incs = poset.incarnations(d, cls);
  std::unordered_map<std::uint64_t, FacetId> index;
  auto code = [](FaceKey k) { return (static_cast<std::uint64_t>(k.facet) << 32) | k.mask; };
  for (std::size_t j = 0; j < incs.size(); ++j) index.emplace(code(incs[j]), static_cast<FacetId>(j));

  const auto lc = static_cast<std::size_t>(link_dim + 1);
  std::vector<FacetId> targets(incs.size() * lc);
  std::vector<Corner> perms(incs.size() * lc * lc);
  std::vector<int> local(static_cast<std::size_t>(t.corners()));
  for (std::size_t j = 0; j < incs.size(); ++j) {
    const FaceKey inc = incs[j];
    std::vector<int> comp;
    for (int c = 0; c < t.corners(); ++c) {
      if (!(inc.mask >> c & 1U)) comp.push_back(c);
    }
    for (std::size_t a = 0; a < lc; ++a) {
      const int c = comp[a];
      const FacetId g = t.target(inc.facet, c);
      const auto p = t.gluing(inc.facet, c);
      const FaceKey image{g, apply_to_mask(p, inc.mask)};
      // Local indices on the image incarnation are ranks among its
      // complement corners.
      int r = 0;
      for (int x = 0; x < t.corners(); ++x) {
        local[static_cast<std::size_t>(x)] = (image.mask >> x & 1U) ? -1 : r++;
      }
      targets[j * lc + a] = index.at(code(image));
      for (std::size_t b = 0; b < lc; ++b) {
        perms[(j * lc + a) * lc + b] =
            static_cast<Corner>(local[p[static_cast<std::size_t>(comp[b])]]);
      }
    }
  }
  return {Triangulation(link_dim, std::move(targets), std::move(perms)),
          std::vector<FaceKey>(incs.begin(), incs.end())};
}

DualGraph dual_graph(const Triangulation& t) {
  DualGraph g;
  g.nodes = t.size();
  const auto c = static_cast<std::size_t>(t.corners());
  bool bipartite = true;
  for (FacetId f = 0; f < t.size(); ++f) {
    for (int i = 0; i < t.corners(); ++i) {
      const FacetId h = t.target(f, i);
      const std::size_t here = f * c + static_cast<std::size_t>(i);
      const std::size_t there = h * c + t.gluing(f, i)[static_cast<std::size_t>(i)];
      if (here < there) g.edges.emplace_back(f, h);
      if (h == f) bipartite = false;
    }
  }
  std::vector<int> color(t.size(), -1);
  std::size_t components = 0;
  for (FacetId root = 0; root < t.size(); ++root) {
    if (color[root] != -1) continue;
    ++components;
    color[root] = 0;
    std::deque<FacetId> queue{root};
    while (!queue.empty()) {
      const FacetId f = queue.front();
      queue.pop_front();
      for (int i = 0; i < t.corners(); ++i) {
        const FacetId h = t.target(f, i);
        if (color[h] == -1) {
          color[h] = 1 - color[f];
          queue.push_back(h);
        } else if (color[h] == color[f]) {
          bipartite = false;
        }
      }
    }
  }
  g.connected = components == 1;
  if (bipartite) g.coloring = std::move(color);
  return g;
}

DoubleCover orientation_double_cover(const Triangulation& t) {
  const std::size_t m = t.size();
  TriangulationBuilder b(t.dimension(), 2 * m);
  for (FacetId f = 0; f < m; ++f) {
    for (int i = 0; i < t.corners(); ++i) {
      const FacetId g = t.target(f, i);
      const auto p = t.gluing(f, i);
      const bool keep_sheet = sign(p) == -1;
      for (std::size_t s = 0; s < 2; ++s) {
        const std::size_t s2 = keep_sheet ? s : 1 - s;
        b.glue(static_cast<FacetId>(f + s * m), i, static_cast<FacetId>(g + s2 * m), p);
      }
    }
  }
  DoubleCover cover{std::move(b).build(), std::vector<FacetId>(2 * m)};
  for (FacetId f = 0; f < m; ++f) {
    cover.deck[f] = static_cast<FacetId>(f + m);
    cover.deck[f + m] = f;
  }
  return cover;
}

}  // namespace multisect
