#include "multisect/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>

#include "multisect/complex.hpp"
#include "multisect/error.hpp"
#include "multisect/gf2.hpp"

namespace multisect {

MultisectionReport multisection_report(std::shared_ptr<const Ambient> ambient, bool generalized) {
  const Ambient& a = *ambient;
  const ValidationReport v = validate(ambient);
  MultisectionReport r;
  r.n = v.n;
  r.k = v.k;
  r.euler = euler_characteristic(a.poset.counts());
  r.subsets = v.subsets;
  r.supports_multisection = v.supports_multisection;
  r.supports_generalized = v.supports_generalized;
  r.generalized_mode = generalized;
  r.diagnostics = v.diagnostics;
  if (!generalized) {
    for (int i = 0; i <= r.k; ++i) {
      const CellComplex spine = extract(ambient, 1U << i);
      if (spine.dimension() <= 1 && components(spine) == 1) {
        r.genera.emplace_back(graph_genus(spine));
      } else {
        r.genera.emplace_back(std::nullopt);
      }
    }
  }
  if (r.k + 1 < 32) {
    const CellComplex central = extract(ambient, (1U << (r.k + 1)) - 1);
    r.central = cell_summary(central);
    if (central.all_cubes() && !central.empty()) {
      const NpcReport npc = npc_check(central);
      r.npc = npc.pass;
      r.npc_reason = npc.reason;
    }
  }
  if (r.central.dimension == 2 && r.central.closed && r.central.orientable) {
    r.surface_orientable = *r.central.orientable;
    r.surface_genus = r.surface_orientable ? (2 - r.central.euler) / 2 : 2 - r.central.euler;
  }
  if (!r.subsets.empty()) {
    std::int64_t sum = 0;
    for (const auto& s : r.subsets) {
      const std::int64_t chi = euler_characteristic(s.counts);
      sum += (std::popcount(s.mask) % 2 == 1) ? chi : -chi;
    }
    r.inclusion_exclusion_ok = sum == r.euler;
    if (!r.inclusion_exclusion_ok) r.diagnostics.push_back("inclusion-exclusion Euler identity fails");
  }
  if (r.n == 4 && r.supports_multisection && r.surface_genus &&
      std::all_of(r.genera.begin(), r.genera.end(), [](const auto& g) { return g.has_value(); }) &&
      r.genera.size() == 3) {
    r.trisection_identity = euler_trisection_check(r).holds;
  }
  return r;
}

MultisectionReport multisection_report(const Triangulation& t, const VertexPartition& p, bool generalized) {
  return multisection_report(make_ambient(t, p), generalized);
}

TrisectionCheck euler_trisection_check(const MultisectionReport& r) {
  if (r.n != 4) throw PreconditionError("trisection identity needs dimension 4");
  if (!r.supports_multisection || !r.surface_genus || r.genera.size() != 3) {
    throw PreconditionError("trisection identity needs a supported trisection");
  }
  std::int64_t sum = 0;
  for (const auto& g : r.genera) {
    if (!g) throw PreconditionError("trisection identity needs every handlebody genus");
    sum += *g;
  }
  // Twice the surface genus, which for a non-orientable surface is its
  // crosscap number.
  const std::int64_t twice_genus = r.surface_orientable ? 2 * *r.surface_genus : *r.surface_genus;
  TrisectionCheck c;
  c.lhs = 2 * r.euler;
  c.rhs = 4 + twice_genus - 2 * sum;
  c.holds = c.lhs == c.rhs;
  if (*r.genera[0] == *r.genera[1] && *r.genera[1] == *r.genera[2]) {
    c.gk = std::pair{*r.surface_genus, *r.genera[0]};
  }
  return c;
}

void free_reduce(Word& w) {
  std::size_t out = 0;
  for (int x : w) {
    if (out > 0 && w[out - 1] == -x) {
      --out;
    } else {
      w[out++] = x;
    }
  }
  w.resize(out);
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::size_t abelianized_rank_gf2(const GroupPresentation& g) {
  std::vector<SparseColumn> cols;
  for (const auto& rel : g.relators) {
    SparseColumn c;
    for (int x : rel) c.push_back(static_cast<std::uint32_t>(std::abs(x) - 1));
    normalize(c);
    cols.push_back(std::move(c));
  }
  return g.generators - gf2_rank(std::move(cols));
}

namespace {

// Oriented edges, a breadth-first spanning tree and generator numbering of a
// connected complex's 1-skeleton.
struct EdgePaths {
  std::vector<std::uint32_t> tail;
  std::vector<std::uint32_t> head;
  /// 0 for tree edges, otherwise the 1-based generator index.
  std::vector<int> generator;
  std::size_t generators = 0;
  /// Edge reaching each vertex from its tree parent (~0 at the root), and
  /// whether it is traversed forwards.
  std::vector<std::uint32_t> parent_edge;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> order;

  Word edge_word(std::uint32_t e) const { return generator[e] ? Word{generator[e]} : Word{}; }
};

EdgePaths edge_paths(const CellComplex& c) {
  if (c.empty() || components(c) != 1) throw PreconditionError("presentation needs a connected complex");
  EdgePaths p;
  const std::size_t ne = c.dimension() >= 1 ? c.count(1) : 0;
  const std::size_t nv = c.count(0);
  p.tail.resize(ne);
  p.head.resize(ne);
  std::vector<std::vector<std::uint32_t>> incident(nv);
  for (std::uint32_t e = 0; e < ne; ++e) {
    const auto f = c.facets(1, e);
    // The endpoint keeping the smaller vertex class is the one that deleted
    // the larger.
    const bool first_is_tail = f[0].deleted >= f[1].deleted;
    p.tail[e] = first_is_tail ? f[0].cell : f[1].cell;
    p.head[e] = first_is_tail ? f[1].cell : f[0].cell;
    incident[p.tail[e]].push_back(e);
    if (p.head[e] != p.tail[e]) incident[p.head[e]].push_back(e);
  }
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  p.parent_edge.assign(nv, kNone);
  p.parent.assign(nv, kNone);
  std::vector<char> seen(nv, 0);
  std::vector<char> tree(ne, 0);
  seen[0] = 1;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    p.order.push_back(x);
    for (auto e : incident[x]) {
      const auto y = p.tail[e] == x ? p.head[e] : p.tail[e];
      if (seen[y]) continue;
      seen[y] = 1;
      tree[e] = 1;
      p.parent_edge[y] = e;
      p.parent[y] = x;
      queue.push_back(y);
    }
  }
  p.generator.assign(ne, 0);
  for (std::uint32_t e = 0; e < ne; ++e) {
    if (!tree[e]) p.generator[e] = static_cast<int>(++p.generators);
  }
  return p;
}

// Word of the tree path from the root to every vertex, built with a
// per-edge map into another group.
template <typename EdgeImage>
std::vector<Word> tree_words(const EdgePaths& p, EdgeImage image) {
  std::vector<Word> words(p.parent.size());
  for (auto x : p.order) {
    if (p.parent[x] == ~std::uint32_t{0}) continue;
    const auto e = p.parent_edge[x];
    Word w = words[p.parent[x]];
    const Word step = image(e);
    if (p.tail[e] == p.parent[x]) {
      w.insert(w.end(), step.begin(), step.end());
    } else {
      const Word inv = inverse_word(step);
      w.insert(w.end(), inv.begin(), inv.end());
    }
    free_reduce(w);
    words[x] = std::move(w);
  }
  return words;
}

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& part : parts) w.insert(w.end(), part.begin(), part.end());
  free_reduce(w);
  return w;
}

}  // namespace

GroupPresentation pi1_presentation(const CellComplex& c) {
  if (!c.all_cubes()) throw PreconditionError("presentation needs a cube complex");
  if (c.dimension() < 1) throw PreconditionError("presentation needs dimension at least one");
  const EdgePaths p = edge_paths(c);
  GroupPresentation g;
  g.generators = p.generators;
  g.provenance = "edge-path presentation; breadth-first tree from vertex 0; " + std::to_string(c.count(0) - 1) +
                 " tree edges";
  if (c.dimension() < 2) return g;
  for (std::uint32_t s = 0; s < c.count(2); ++s) {
    const auto factors = c.factors(2, s);
    std::vector<std::vector<std::uint32_t>> doubled;
    for (const auto& f : factors) {
      if (f.size() == 2) doubled.push_back(f);
    }
    if (doubled.size() != 2 || doubled[0][0] == doubled[0][1] || doubled[1][0] == doubled[1][1]) {
      throw PreconditionError("degenerate square in presentation");
    }
    auto edge_deleting = [&](std::uint32_t v) {
      for (const auto& f : c.facets(2, s)) {
        if (f.deleted == v) return f.cell;
      }
      throw Error("square facet not found");
    };
    const auto& a = doubled[0];
    const auto& b = doubled[1];
    // Boundary from corner (a0,b0): along class a at b0, class b at a1, back
    // along class a at b1, back along class b at a0.
    Word rel = concat({p.edge_word(edge_deleting(b[1])), p.edge_word(edge_deleting(a[0])),
                       inverse_word(p.edge_word(edge_deleting(b[0]))),
                       inverse_word(p.edge_word(edge_deleting(a[1])))});
    if (!rel.empty()) g.relators.push_back(std::move(rel));
  }
  return g;
}

namespace {

struct CentralMaps {
  CellComplex central;
  CellComplex target;
  EdgePaths central_paths;
  /// Face class of dimension 1 the central edge pushes to, if the edge
  /// doubles the chosen class.
  std::vector<std::optional<std::uint32_t>> edge_face;
};

CentralMaps central_maps(std::shared_ptr<const Ambient> ambient, int cls) {
  const Ambient& a = *ambient;
  if (cls < 0 || cls > a.partition.k) throw PreconditionError("class out of range");
  CellComplex central = extract(ambient, (1U << (a.partition.k + 1)) - 1);
  if (!central.all_cubes()) throw PreconditionError("central complex is not a cube complex");
  if (central.dimension() < 1) throw PreconditionError("central complex has no edges");
  CellComplex target = extract(ambient, 1U << cls);
  EdgePaths paths = edge_paths(central);
  std::vector<std::optional<std::uint32_t>> edge_face(central.count(1));
  for (std::uint32_t e = 0; e < central.count(1); ++e) {
    const FaceKey k = central.key(1, e);
    std::uint32_t mask = 0;
    for (std::uint32_t m = k.mask; m != 0; m &= m - 1) {
      const int x = std::countr_zero(m);
      if (a.partition.labels[a.poset.vertex_of(k.facet, x)] == cls) mask |= 1U << x;
    }
    if (std::popcount(mask) == 2) edge_face[e] = a.poset.class_of(k.facet, mask);
  }
  return {std::move(central), std::move(target), std::move(paths), std::move(edge_face)};
}

}  // namespace

EpimorphismReport inclusion_epimorphism(std::shared_ptr<const Ambient> ambient, int cls) {
  CentralMaps maps = central_maps(ambient, cls);
  if (maps.target.dimension() > 1) throw PreconditionError("class spine is not a graph");
  const EdgePaths target_paths = edge_paths(maps.target);
  auto image = [&](std::uint32_t e) -> Word {
    if (!maps.edge_face[e]) return {};
    const auto g = maps.target.find(1, *maps.edge_face[e]);
    if (!g) throw Error("central edge pushes to a missing class edge");
    return target_paths.edge_word(*g);
  };
  const EdgePaths& p = maps.central_paths;
  const std::vector<Word> w = tree_words(p, image);
  EpimorphismReport rep;
  rep.source_generators = p.generators;
  rep.target_rank = target_paths.generators;
  rep.images.resize(p.generators);
  for (std::uint32_t e = 0; e < p.generator.size(); ++e) {
    if (!p.generator[e]) continue;
    rep.images[static_cast<std::size_t>(p.generator[e] - 1)] =
        concat({w[p.tail[e]], image(e), inverse_word(w[p.head[e]])});
  }
  const GroupPresentation source = pi1_presentation(maps.central);
  for (const auto& rel : source.relators) {
    Word out;
    for (int x : rel) {
      const Word& img = rep.images[static_cast<std::size_t>(std::abs(x) - 1)];
      const Word part = x > 0 ? img : inverse_word(img);
      out.insert(out.end(), part.begin(), part.end());
    }
    free_reduce(out);
    if (!out.empty()) ++rep.surviving_relators;
  }
  rep.relators_die = rep.surviving_relators == 0;
  std::vector<SparseColumn> cols;
  for (const auto& img : rep.images) {
    SparseColumn c;
    for (int x : img) c.push_back(static_cast<std::uint32_t>(std::abs(x) - 1));
    normalize(c);
    cols.push_back(std::move(c));
  }
  rep.abelian_surjective = gf2_rank(std::move(cols)) == rep.target_rank;
  return rep;
}

bool h1_onto_check(std::shared_ptr<const Ambient> ambient, int cls) {
  const Ambient& a = *ambient;
  CentralMaps maps = central_maps(ambient, cls);
  const EdgePaths& p = maps.central_paths;
  // Mod-2 chain of the pushed tree path to every central vertex.
  std::vector<SparseColumn> path(p.parent.size());
  auto add = [](SparseColumn& chain, std::uint32_t edge) {
    chain.push_back(edge);
    normalize(chain);
  };
  for (auto x : p.order) {
    if (p.parent[x] == ~std::uint32_t{0}) continue;
    path[x] = path[p.parent[x]];
    if (const auto f = maps.edge_face[p.parent_edge[x]]) add(path[x], *f);
  }
  std::vector<SparseColumn> boundary2(a.poset.count(2));
  for (std::uint32_t t = 0; t < a.poset.count(2); ++t) {
    boundary2[t] = a.poset.faces(2, t);
    normalize(boundary2[t]);
  }
  std::vector<SparseColumn> with_images = boundary2;
  for (std::uint32_t e = 0; e < p.generator.size(); ++e) {
    if (!p.generator[e]) continue;
    SparseColumn cycle = path[p.tail[e]];
    cycle.insert(cycle.end(), path[p.head[e]].begin(), path[p.head[e]].end());
    if (const auto f = maps.edge_face[e]) cycle.push_back(*f);
    normalize(cycle);
    with_images.push_back(std::move(cycle));
  }
  const std::size_t b1 = summarize(a.triangulation, a.poset).betti.at(1);
  return gf2_rank(std::move(with_images)) - gf2_rank(std::move(boundary2)) == b1;
}

}  // namespace multisect
