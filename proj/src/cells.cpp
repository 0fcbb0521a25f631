#include "multisect/cells.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

#include "multisect/complex.hpp"
#include "multisect/error.hpp"
#include "multisect/gf2.hpp"
#include "multisect/union_find.hpp"

namespace multisect {

std::shared_ptr<const Ambient> make_ambient(Triangulation t, VertexPartition p) {
  FacePoset poset(t);
  if (p.k < 0 || p.k > 30) throw PreconditionError("partition class count out of range");
  if (p.labels.size() != poset.count(0)) throw PreconditionError("partition does not cover the vertex classes");
  for (int l : p.labels) {
    if (l < 0 || l > p.k) throw PreconditionError("unlabeled vertex class or label out of range");
  }
  return std::make_shared<const Ambient>(Ambient{std::move(t), std::move(poset), std::move(p)});
}

namespace {

int label_of(const Ambient& a, FacetId f, int corner) {
  return a.partition.labels[a.poset.vertex_of(f, corner)];
}

// Per-label corner counts of an incarnation; returns the support mask.
std::uint32_t multiplicities(const Ambient& a, FaceKey key, std::vector<int>& mult) {
  std::fill(mult.begin(), mult.end(), 0);
  std::uint32_t support = 0;
  for (std::uint32_t m = key.mask; m != 0; m &= m - 1) {
    const int l = label_of(a, key.facet, std::countr_zero(m));
    ++mult[static_cast<std::size_t>(l)];
    support |= 1U << l;
  }
  return support;
}

}  // namespace

CellComplex::CellComplex(std::shared_ptr<const Ambient> ambient, std::uint32_t subset,
                         std::vector<std::vector<CellRef>> cells)
    : ambient_(std::move(ambient)), subset_(subset), cells_(std::move(cells)),
      face_offset_(std::popcount(subset) - 1) {
  while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
  const Ambient& a = *ambient_;
  std::vector<int> mult(static_cast<std::size_t>(a.partition.k + 1));
  offsets_.resize(cells_.size());
  facets_.resize(cells_.size());
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    auto& off = offsets_[d];
    off.assign(cells_[d].size() + 1, 0);
    for (std::uint32_t i = 0; i < cells_[d].size(); ++i) {
      const FaceKey k = key(static_cast<int>(d), i);
      multiplicities(a, k, mult);
      for (int m : mult) {
        if (m > 2) all_cubes_ = false;
      }
      if (d > 0) {
        for (std::uint32_t rest = k.mask; rest != 0; rest &= rest - 1) {
          const int x = std::countr_zero(rest);
          if (mult[static_cast<std::size_t>(label_of(a, k.facet, x))] < 2) continue;
          const std::uint32_t sub = a.poset.class_of(k.facet, k.mask & ~(1U << x));
          const auto idx = find(cells_[d][i].face_dim - 1, sub);
          if (!idx) throw Error("cell complex is not closed under faces");
          facets_[d].push_back({*idx, a.poset.vertex_of(k.facet, x)});
        }
      }
      off[i + 1] = static_cast<std::uint32_t>(facets_[d].size());
    }
  }
}

std::vector<std::size_t> CellComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells_) out.push_back(c.size());
  return out;
}

std::size_t CellComplex::total() const {
  std::size_t n = 0;
  for (const auto& c : cells_) n += c.size();
  return n;
}

FaceKey CellComplex::key(int d, std::uint32_t i) const {
  const CellRef& r = cell(d, i);
  return ambient_->poset.key(r.face_dim, r.face);
}

std::span<const CellFacet> CellComplex::facets(int d, std::uint32_t i) const noexcept {
  const auto& off = offsets_[static_cast<std::size_t>(d)];
  return {facets_[static_cast<std::size_t>(d)].data() + off[i], off[i + 1] - off[i]};
}

std::optional<std::uint32_t> CellComplex::find(int face_dim, std::uint32_t face) const {
  const int d = face_dim - face_offset_;
  if (d < 0 || d > dimension()) return std::nullopt;
  const auto& list = cells_[static_cast<std::size_t>(d)];
  const auto it = std::lower_bound(list.begin(), list.end(), face,
                                   [](const CellRef& r, std::uint32_t f) { return r.face < f; });
  if (it == list.end() || it->face != face) return std::nullopt;
  return static_cast<std::uint32_t>(it - list.begin());
}

std::vector<std::vector<std::uint32_t>> CellComplex::factors(int d, std::uint32_t i) const {
  const Ambient& a = *ambient_;
  const FaceKey k = key(d, i);
  std::map<int, std::vector<std::uint32_t>> by_label;
  for (std::uint32_t m = k.mask; m != 0; m &= m - 1) {
    const int x = std::countr_zero(m);
    by_label[label_of(a, k.facet, x)].push_back(a.poset.vertex_of(k.facet, x));
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [label, vs] : by_label) {
    std::sort(vs.begin(), vs.end());
    out.push_back(std::move(vs));
  }
  return out;
}

CellComplex extract(std::shared_ptr<const Ambient> ambient, std::uint32_t subset, int max_multiplicity) {
  const Ambient& a = *ambient;
  const int k = a.partition.k;
  if (subset == 0) throw PreconditionError("empty class subset");
  if (k < 31 && (subset >> (k + 1)) != 0) throw PreconditionError("class subset out of range");
  const int r = std::popcount(subset);
  std::vector<int> mult(static_cast<std::size_t>(k + 1));
  std::vector<std::vector<CellRef>> cells;
  for (int d = r - 1; d <= a.poset.dimension(); ++d) {
    std::vector<CellRef> level;
    for (std::uint32_t cls = 0; cls < a.poset.count(d); ++cls) {
      if (multiplicities(a, a.poset.key(d, cls), mult) != subset) continue;
      if (max_multiplicity > 0 &&
          std::any_of(mult.begin(), mult.end(), [&](int m) { return m > max_multiplicity; })) {
        continue;
      }
      level.push_back({d, cls});
    }
    cells.push_back(std::move(level));
  }
  return CellComplex(std::move(ambient), subset, std::move(cells));
}

std::size_t components(const CellComplex& c) {
  if (c.empty()) return 0;
  UnionFind uf(c.count(0));
  if (c.dimension() >= 1) {
    for (std::uint32_t e = 0; e < c.count(1); ++e) {
      const auto f = c.facets(1, e);
      for (const auto& x : f) uf.unite(f[0].cell, x.cell);
    }
  }
  return uf.components();
}

namespace {

// Sign of the incidence of a facet of a product-of-simplices cell, relative
// to the orientations given by vertex-class order within each factor.
std::optional<int> incidence_sign(const std::vector<std::vector<std::uint32_t>>& factors, std::uint32_t deleted) {
  int offset = 0;
  for (const auto& f : factors) {
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) return std::nullopt;
    const auto it = std::find(f.begin(), f.end(), deleted);
    if (it != f.end()) {
      const int p = static_cast<int>(it - f.begin());
      return ((offset + p) % 2 == 0) ? 1 : -1;
    }
    offset += static_cast<int>(f.size()) - 1;
  }
  return std::nullopt;
}

std::optional<bool> orientable_closed(const CellComplex& c) {
  const int top = c.dimension();
  if (top == 0) return true;
  struct Incidence {
    std::uint32_t cell;
    int sign;
  };
  std::vector<std::vector<Incidence>> around(c.count(top - 1));
  for (std::uint32_t i = 0; i < c.count(top); ++i) {
    const auto factors = c.factors(top, i);
    for (const auto& f : c.facets(top, i)) {
      const auto s = incidence_sign(factors, f.deleted);
      if (!s) return std::nullopt;
      around[f.cell].push_back({i, *s});
    }
  }
  std::vector<int> o(c.count(top), 0);
  std::vector<std::vector<std::pair<std::uint32_t, int>>> adj(c.count(top));
  for (const auto& inc : around) {
    if (inc.size() != 2) return std::nullopt;
    // o_a·s_a + o_b·s_b = 0, so o_b = -s_a·s_b·o_a.
    const int rel = -inc[0].sign * inc[1].sign;
    if (inc[0].cell == inc[1].cell) {
      if (rel != 1) return false;
      continue;
    }
    adj[inc[0].cell].emplace_back(inc[1].cell, rel);
    adj[inc[1].cell].emplace_back(inc[0].cell, rel);
  }
  for (std::uint32_t root = 0; root < o.size(); ++root) {
    if (o[root] != 0) continue;
    o[root] = 1;
    std::deque<std::uint32_t> queue{root};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto& [y, rel] : adj[x]) {
        if (o[y] == 0) {
          o[y] = rel * o[x];
          queue.push_back(y);
        } else if (o[y] != rel * o[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

CellSummary cell_summary(const CellComplex& c) {
  CellSummary s;
  s.dimension = c.dimension();
  s.counts = c.counts();
  s.euler = euler_characteristic(s.counts);
  s.connected = components(c) == 1;
  if (c.empty()) return s;
  const int top = c.dimension();
  if (top == 0) {
    s.closed = true;
  } else {
    std::vector<std::uint32_t> hits(c.count(top - 1), 0);
    for (std::uint32_t i = 0; i < c.count(top); ++i) {
      for (const auto& f : c.facets(top, i)) ++hits[f.cell];
    }
    s.closed = std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h == 2; });
  }
  std::vector<std::vector<SparseColumn>> boundaries(s.counts.size());
  for (int d = 1; d <= top; ++d) {
    auto& cols = boundaries[static_cast<std::size_t>(d)];
    cols.resize(c.count(d));
    for (std::uint32_t i = 0; i < c.count(d); ++i) {
      for (const auto& f : c.facets(d, i)) cols[i].push_back(f.cell);
      normalize(cols[i]);
    }
  }
  s.betti = gf2_betti(s.counts, std::move(boundaries));
  if (s.closed) s.orientable = orientable_closed(c);
  return s;
}

namespace {

struct LinkCorner {
  int dim;  // simplex dimension in the link
  std::vector<std::uint32_t> edges;
};

// Every corner of every cell at the given vertex (or at all vertices when
// vertex is unset), as the edge cells leaving the corner.
std::vector<std::vector<LinkCorner>> corners(const CellComplex& c, std::optional<std::uint32_t> vertex) {
  const Ambient& a = c.ambient();
  std::vector<std::vector<LinkCorner>> out(c.count(0));
  const int base_dim = c.cell(0, 0).face_dim;
  for (int d = 1; d <= c.dimension(); ++d) {
    for (std::uint32_t i = 0; i < c.count(d); ++i) {
      const FaceKey k = c.key(d, i);
      // Corner positions per label: one or two in cube mode.
      std::map<int, std::vector<int>> by_label;
      for (std::uint32_t m = k.mask; m != 0; m &= m - 1) {
        const int x = std::countr_zero(m);
        by_label[label_of(a, k.facet, x)].push_back(x);
      }
      std::vector<const std::vector<int>*> groups;
      for (const auto& [l, xs] : by_label) groups.push_back(&xs);
      std::vector<std::size_t> pick(groups.size(), 0);
      while (true) {
        std::uint32_t u = 0;
        for (std::size_t g = 0; g < groups.size(); ++g) u |= 1U << (*groups[g])[pick[g]];
        const std::uint32_t v_face = a.poset.class_of(k.facet, u);
        const auto v = c.find(base_dim, v_face);
        if (v && (!vertex || *v == *vertex)) {
          LinkCorner corner{d - 1, {}};
          for (std::uint32_t rest = k.mask & ~u; rest != 0; rest &= rest - 1) {
            const std::uint32_t e_face = a.poset.class_of(k.facet, u | (rest & (~rest + 1)));
            corner.edges.push_back(*c.find(base_dim + 1, e_face));
          }
          out[*v].push_back(std::move(corner));
        }
        std::size_t g = 0;
        while (g < groups.size() && ++pick[g] == groups[g]->size()) pick[g++] = 0;
        if (g == groups.size()) break;
      }
    }
  }
  return out;
}

VertexLink build_link(const CellComplex& c, const std::vector<LinkCorner>& at) {
  VertexLink link;
  link.simplices.resize(static_cast<std::size_t>(std::max(c.dimension(), 0)));
  for (const auto& corner : at) {
    if (corner.dim == 0) link.vertices.push_back(corner.edges[0]);
  }
  std::sort(link.vertices.begin(), link.vertices.end());
  if (std::adjacent_find(link.vertices.begin(), link.vertices.end()) != link.vertices.end()) {
    link.simplicial = false;
    link.defect = "loop edge at vertex";
    link.vertices.erase(std::unique(link.vertices.begin(), link.vertices.end()), link.vertices.end());
  }
  std::vector<std::set<std::vector<std::uint32_t>>> seen(link.simplices.size());
  for (const auto& corner : at) {
    std::vector<std::uint32_t> s;
    for (auto e : corner.edges) {
      s.push_back(static_cast<std::uint32_t>(
          std::lower_bound(link.vertices.begin(), link.vertices.end(), e) - link.vertices.begin()));
    }
    std::sort(s.begin(), s.end());
    const auto h = static_cast<std::size_t>(corner.dim);
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      if (link.simplicial) link.defect = "corner with a repeated edge";
      link.simplicial = false;
    }
    if (!seen[h].insert(s).second) {
      if (link.simplicial) link.defect = h == 1 ? "bigon: two corners span the same pair of edges"
                                                : "two corners span the same edges";
      link.simplicial = false;
    }
    link.simplices[h].push_back(std::move(s));
  }
  for (auto& level : link.simplices) std::sort(level.begin(), level.end());
  return link;
}

void require_cubes(const CellComplex& c) {
  if (!c.all_cubes()) throw PreconditionError("cell complex is not a cube complex");
}

}  // namespace

VertexLink vertex_link(const CellComplex& c, std::uint32_t vertex) {
  require_cubes(c);
  if (c.empty() || vertex >= c.count(0)) throw InputError("unknown vertex cell " + std::to_string(vertex));
  return build_link(c, corners(c, vertex)[vertex]);
}

NpcReport npc_check(const CellComplex& c) {
  require_cubes(c);
  NpcReport report;
  if (c.empty()) return report;
  const auto all = corners(c, std::nullopt);
  for (std::uint32_t v = 0; v < c.count(0); ++v) {
    const VertexLink link = build_link(c, all[v]);
    if (!link.simplicial) {
      report = {false, v, {}, "link not simplicial: " + link.defect};
      return report;
    }
    const std::size_t nv = link.vertices.size();
    std::vector<std::vector<std::uint32_t>> adj(nv);
    std::set<std::vector<std::uint32_t>> simplices;
    for (const auto& level : link.simplices) simplices.insert(level.begin(), level.end());
    if (!link.simplices.empty() && link.simplices.size() > 1) {
      for (const auto& e : link.simplices[1]) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
      }
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    // Extend cliques one larger vertex at a time; every clique reached is
    // already known to span a simplex.
    std::vector<std::vector<std::uint32_t>> frontier;
    if (link.simplices.size() > 1) frontier = link.simplices[1];
    while (!frontier.empty()) {
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& clique : frontier) {
        for (std::uint32_t w : adj[clique.back()]) {
          if (w <= clique.back()) continue;
          bool all_adjacent = true;
          for (std::size_t i = 0; i + 1 < clique.size() && all_adjacent; ++i) {
            all_adjacent = std::binary_search(adj[clique[i]].begin(), adj[clique[i]].end(), w);
          }
          if (!all_adjacent) continue;
          auto bigger = clique;
          bigger.push_back(w);
          if (!simplices.count(bigger)) {
            report.pass = false;
            report.vertex = v;
            for (auto p : bigger) report.clique.push_back(link.vertices[p]);
            report.reason = "link not flag: clique of " + std::to_string(bigger.size()) + " edges spans no corner";
            return report;
          }
          next.push_back(std::move(bigger));
        }
      }
      frontier = std::move(next);
    }
  }
  return report;
}

Collapse collapse(const CellComplex& c) {
  const int top = c.dimension();
  if (top <= 0) return {c, top};
  std::vector<std::vector<char>> alive(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<std::uint32_t>> cofaces(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<std::vector<std::uint32_t>>> up(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    alive[static_cast<std::size_t>(d)].assign(c.count(d), 1);
    cofaces[static_cast<std::size_t>(d)].assign(c.count(d), 0);
    up[static_cast<std::size_t>(d)].resize(c.count(d));
  }
  for (int d = 1; d <= top; ++d) {
    for (std::uint32_t i = 0; i < c.count(d); ++i) {
      for (const auto& f : c.facets(d, i)) {
        ++cofaces[static_cast<std::size_t>(d - 1)][f.cell];
        up[static_cast<std::size_t>(d - 1)][f.cell].push_back(i);
      }
    }
  }
  auto remove = [&](int d, std::uint32_t i) {
    alive[static_cast<std::size_t>(d)][i] = 0;
    if (d == 0) return;
    for (const auto& f : c.facets(d, i)) --cofaces[static_cast<std::size_t>(d - 1)][f.cell];
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int d = top; d >= 1; --d) {
      const auto lower = static_cast<std::size_t>(d - 1);
      for (std::uint32_t s = 0; s < c.count(d - 1); ++s) {
        if (!alive[lower][s] || cofaces[lower][s] != 1) continue;
        std::uint32_t t = 0;
        for (std::uint32_t x : up[lower][s]) {
          if (alive[static_cast<std::size_t>(d)][x]) t = x;
        }
        if (cofaces[static_cast<std::size_t>(d)][t] != 0) continue;
        remove(d, t);
        remove(d - 1, s);
        changed = true;
      }
    }
  }
  std::vector<std::vector<CellRef>> kept(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    for (std::uint32_t i = 0; i < c.count(d); ++i) {
      if (alive[static_cast<std::size_t>(d)][i]) kept[static_cast<std::size_t>(d)].push_back(c.cell(d, i));
    }
  }
  CellComplex out(c.ambient_ptr(), c.subset(), std::move(kept));
  const int dim = out.dimension();
  return {std::move(out), dim};
}

std::int64_t graph_genus(const CellComplex& c) {
  if (c.dimension() > 1) throw PreconditionError("graph genus needs a complex of dimension at most one");
  if (components(c) != 1) throw PreconditionError("graph genus needs a connected complex");
  const auto e = c.dimension() == 1 ? static_cast<std::int64_t>(c.count(1)) : 0;
  return e - static_cast<std::int64_t>(c.count(0)) + 1;
}

}  // namespace multisect
