#include "multisect/partition.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "multisect/complex.hpp"
#include "multisect/error.hpp"
#include "multisect/union_find.hpp"

namespace multisect {

Scheme parse_scheme(const std::string& name) {
  if (name == "odd-bary") return Scheme::OddBary;
  if (name == "even-bary") return Scheme::EvenBary;
  if (name == "even-npc") return Scheme::EvenNpc;
  if (name == "pairs") return Scheme::Pairs;
  if (name == "explicit") return Scheme::Explicit;
  throw InputError("unknown scheme '" + name + "'");
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::OddBary: return "odd-bary";
    case Scheme::EvenBary: return "even-bary";
    case Scheme::EvenNpc: return "even-npc";
    case Scheme::Pairs: return "pairs";
    case Scheme::Explicit: return "explicit";
  }
  return "explicit";
}

std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::stringstream outer(text);
  std::string block;
  while (std::getline(outer, block, '/')) {
    std::vector<int> items;
    std::stringstream inner(block);
    std::string item;
    while (std::getline(inner, item, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size() || v < 0) throw InputError("");
        items.push_back(v);
      } catch (const std::exception&) {
        throw InputError("malformed block list '" + text + "'");
      }
    }
    if (items.empty()) throw InputError("malformed block list '" + text + "'");
    blocks.push_back(std::move(items));
  }
  if (blocks.empty()) throw InputError("malformed block list '" + text + "'");
  return blocks;
}

namespace {

const CarrierLabels& need_carriers(const SchemeAux& aux, std::size_t classes, const std::string& scheme) {
  if (!aux.carriers) throw PreconditionError(scheme + " scheme needs carrier labels");
  if (aux.carriers->dim.size() != classes) {
    throw PreconditionError(scheme + " scheme: carrier labels do not match the vertex classes");
  }
  return *aux.carriers;
}

std::vector<int> labels_from_corners(const Triangulation& t, const VertexClasses& vc,
                                     const std::vector<Corner>& corner_labels,
                                     const std::vector<int>& block_of_label) {
  std::vector<int> labels(vc.count(), -1);
  const auto c = static_cast<std::size_t>(t.corners());
  for (FacetId f = 0; f < t.size(); ++f) {
    for (int x = 0; x < t.corners(); ++x) {
      const int b = block_of_label[corner_labels[f * c + static_cast<std::size_t>(x)]];
      int& slot = labels[vc.of(f, x)];
      if (slot != -1 && slot != b) {
        throw PreconditionError("corner labeling is inconsistent on vertex class " +
                                format_key(vc.key(vc.of(f, x))));
      }
      slot = b;
    }
  }
  return labels;
}

}  // namespace

VertexPartition scheme_partition(const Triangulation& t, Scheme scheme, const SchemeAux& aux) {
  const int n = t.dimension();
  const VertexClasses vc(t);
  VertexPartition p;
  p.scheme = scheme_name(scheme);
  switch (scheme) {
    case Scheme::OddBary:
    case Scheme::EvenBary: {
      const bool odd = scheme == Scheme::OddBary;
      if ((n % 2 == 1) != odd) {
        throw PreconditionError("parity mismatch: " + p.scheme + " requires " + (odd ? "odd" : "even") + " n");
      }
      const auto& car = need_carriers(aux, vc.count(), p.scheme);
      p.k = n / 2;
      for (int d : car.dim) p.labels.push_back(d / 2);
      break;
    }
    case Scheme::EvenNpc: {
      if (n % 2 != 0) throw PreconditionError("parity mismatch: even-npc requires even n");
      const auto& car = need_carriers(aux, vc.count(), p.scheme);
      if (!aux.coloring) throw PreconditionError("even-npc scheme needs the intermediate dual coloring");
      p.k = n / 2;
      for (std::size_t v = 0; v < car.dim.size(); ++v) {
        const int d = car.dim[v];
        if (d == n) {
          const auto top = car.top_facet[v];
          if (top < 0 || static_cast<std::size_t>(top) >= aux.coloring->size()) {
            throw PreconditionError("even-npc scheme: coloring does not cover the intermediate facets");
          }
          p.labels.push_back((*aux.coloring)[static_cast<std::size_t>(top)]);
        } else {
          p.labels.push_back(d < 2 ? d : d / 2 + 1);
        }
      }
      break;
    }
    case Scheme::Pairs: {
      if (aux.blocks.empty()) throw PreconditionError("pairs scheme needs blocks");
      std::vector<int> block_of_label(static_cast<std::size_t>(n + 1), -1);
      for (std::size_t b = 0; b < aux.blocks.size(); ++b) {
        for (int x : aux.blocks[b]) {
          if (x < 0 || x > n) throw PreconditionError("pairs scheme: label " + std::to_string(x) + " out of range");
          if (block_of_label[static_cast<std::size_t>(x)] != -1) {
            throw PreconditionError("pairs scheme: label " + std::to_string(x) + " in two blocks");
          }
          block_of_label[static_cast<std::size_t>(x)] = static_cast<int>(b);
        }
      }
      if (std::count(block_of_label.begin(), block_of_label.end(), -1) != 0) {
        throw PreconditionError("pairs scheme: blocks must cover labels 0.." + std::to_string(n));
      }
      std::vector<Corner> corner_labels = t.corner_labels();
      if (corner_labels.empty()) {
        const SymRep r = symmetric_representation(t);
        if (!r.trivial) throw PreconditionError("pairs scheme needs a global corner labeling");
        corner_labels = r.labeling;
      }
      p.k = static_cast<int>(aux.blocks.size()) - 1;
      p.labels = labels_from_corners(t, vc, corner_labels, block_of_label);
      break;
    }
    case Scheme::Explicit: {
      if (!aux.labels) throw PreconditionError("explicit scheme needs a label map");
      if (aux.labels->labels.size() != vc.count()) {
        throw PreconditionError("explicit labels do not cover the vertex classes");
      }
      p.k = aux.labels->k;
      p.labels = aux.labels->labels;
      for (int l : p.labels) {
        if (l < 0 || l > p.k) throw PreconditionError("label out of range: " + std::to_string(l));
      }
      break;
    }
  }
  return p;
}

namespace {

// Vertex class of every vertex id of a vertex-format triangulation.
std::map<std::int64_t, std::uint32_t> classes_by_id(const Triangulation& t) {
  const VertexClasses vc(t);
  std::map<std::int64_t, std::uint32_t> out;
  for (FacetId f = 0; f < t.size(); ++f) {
    const auto vs = t.facet_vertices(f);
    for (std::size_t x = 0; x < vs.size(); ++x) out.emplace(vs[x], vc.of(f, static_cast<int>(x)));
  }
  return out;
}

// The class holding exactly one corner of every facet, if one exists.
int fixed_singleton(const Triangulation& t, const VertexPartition& p) {
  const VertexClasses vc(t);
  std::vector<char> candidate(static_cast<std::size_t>(p.k + 1), 1);
  std::vector<int> count(static_cast<std::size_t>(p.k + 1));
  for (FacetId f = 0; f < t.size(); ++f) {
    std::fill(count.begin(), count.end(), 0);
    for (int x = 0; x < t.corners(); ++x) ++count[static_cast<std::size_t>(p.labels[vc.of(f, x)])];
    for (std::size_t l = 0; l < count.size(); ++l) {
      if (count[l] != 1) candidate[l] = 0;
    }
  }
  for (std::size_t l = 0; l < candidate.size(); ++l) {
    if (candidate[l]) return static_cast<int>(l);
  }
  return -1;
}

}  // namespace

VertexPartition join_partition(const Triangulation& a, const VertexPartition& pa, const Triangulation& b,
                               const VertexPartition& pb, const Triangulation& joined) {
  if (!a.has_vertex_ids() || !b.has_vertex_ids() || !joined.has_vertex_ids()) {
    throw PreconditionError("join requires simplicial vertex format");
  }
  const bool merge = a.dimension() % 2 == 0 && b.dimension() % 2 == 0;
  int single_a = -1;
  int single_b = -1;
  if (merge) {
    single_a = fixed_singleton(a, pa);
    single_b = fixed_singleton(b, pb);
    if (single_a < 0 || single_b < 0) {
      throw PreconditionError("join partition needs a class that is a singleton in every facet");
    }
  }
  // Class of B's label l in the joined partition.
  std::vector<int> b_class(static_cast<std::size_t>(pb.k + 1));
  int next = pa.k + 1;
  for (int l = 0; l <= pb.k; ++l) b_class[static_cast<std::size_t>(l)] = (merge && l == single_b) ? single_a : next++;

  const auto ida = classes_by_id(a);
  const auto idb = classes_by_id(b);
  std::vector<int> label_of_new_id;
  for (const auto& [id, cls] : ida) label_of_new_id.push_back(pa.labels[cls]);
  for (const auto& [id, cls] : idb) label_of_new_id.push_back(b_class[static_cast<std::size_t>(pb.labels[cls])]);

  const VertexClasses vc(joined);
  VertexPartition p{next - 1, std::vector<int>(vc.count(), -1), "join"};
  for (FacetId f = 0; f < joined.size(); ++f) {
    const auto vs = joined.facet_vertices(f);
    for (std::size_t x = 0; x < vs.size(); ++x) {
      p.labels[vc.of(f, static_cast<int>(x))] = label_of_new_id.at(static_cast<std::size_t>(vs[x]));
    }
  }
  return p;
}

int multisection_spine_bound(int n, int k, int r) { return (n == 2 * k && r == k) ? r - 1 : r; }

const SubsetReport& ValidationReport::subset(std::uint32_t mask) const {
  for (const auto& s : subsets) {
    if (s.mask == mask) return s;
  }
  throw InputError("no report for class subset " + std::to_string(mask));
}

namespace {

std::string class_list(const std::vector<int>& classes) {
  std::string out = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) out += (i ? "," : "") + std::to_string(classes[i]);
  return out + "}";
}

// Link conditions sufficient in dimension four; reported, never enforced.
void four_dimensional_link_diagnostics(const Ambient& a, std::vector<std::string>& diagnostics) {
  const FacePoset& poset = a.poset;
  const auto& labels = a.partition.labels;
  std::size_t low_degree = 0;
  std::string first_low;
  for (std::uint32_t cls = 0; cls < poset.count(2); ++cls) {
    std::set<int> seen;
    for (auto v : poset.vertices(2, cls)) seen.insert(labels[v]);
    if (seen.size() == 3 && poset.incarnations(2, cls).size() < 4) {
      if (low_degree++ == 0) first_low = format_key(poset.key(2, cls));
    }
  }
  if (low_degree > 0) {
    diagnostics.push_back("rainbow 2-face degree condition fails at " + std::to_string(low_degree) +
                          " faces, first " + first_low);
  }
  std::size_t no_free = 0;
  std::string first_no_free;
  for (int h = 0; h <= a.partition.k; ++h) {
    for (std::uint32_t tet = 0; tet < poset.count(3); ++tet) {
      const auto tv = poset.vertices(3, tet);
      if (std::any_of(tv.begin(), tv.end(), [&](std::uint32_t v) { return labels[v] == h; })) continue;
      bool found = false;
      for (std::uint32_t tri : poset.faces(3, tet)) {
        // The link of the 2-face is a circle; every link vertex is counted
        // once from each of its two segments.
        std::size_t in_h = 0;
        std::size_t total = 0;
        for (const FaceKey& inc : poset.incarnations(2, tri)) {
          for (int x = 0; x < a.triangulation.corners(); ++x) {
            if (inc.mask >> x & 1U) continue;
            ++total;
            if (labels[poset.vertex_of(inc.facet, x)] == h) ++in_h;
          }
        }
        // Each link vertex is seen from the two facets around it.
        if (total > 0 && in_h / 2 + 1 == total / 2) found = true;
      }
      if (!found && no_free++ == 0) {
        first_no_free = format_key(poset.key(3, tet)) + " for class " + std::to_string(h);
      }
    }
  }
  if (no_free > 0) {
    diagnostics.push_back("free-face link condition fails at " + std::to_string(no_free) + " 3-faces, first " +
                          first_no_free);
  }
}

}  // namespace

ValidationReport validate(std::shared_ptr<const Ambient> ambient) {
  const Ambient& a = *ambient;
  const Triangulation& t = a.triangulation;
  const FacePoset& poset = a.poset;
  const auto& labels = a.partition.labels;
  ValidationReport rep;
  rep.n = t.dimension();
  rep.k = a.partition.k;
  const int n = rep.n;
  const int k = rep.k;
  const auto classes = static_cast<std::size_t>(k + 1);

  rep.profile_ok = n == 2 * k || n == 2 * k + 1;
  if (!rep.profile_ok) {
    rep.diagnostics.push_back("class count " + std::to_string(k + 1) + " does not fit dimension " +
                              std::to_string(n));
  }
  rep.profiles.resize(t.size());
  std::size_t bad_profiles = 0;
  for (FacetId f = 0; f < t.size(); ++f) {
    auto& prof = rep.profiles[f];
    prof.assign(classes, 0);
    for (int x = 0; x < t.corners(); ++x) ++prof[static_cast<std::size_t>(labels[poset.vertex_of(f, x)])];
    const auto ones = std::count(prof.begin(), prof.end(), 1);
    const auto twos = std::count(prof.begin(), prof.end(), 2);
    const bool ok = n % 2 == 1 ? twos == static_cast<long>(classes) : (ones == 1 && twos == static_cast<long>(classes) - 1);
    if (!ok && bad_profiles++ == 0) rep.diagnostics.push_back("multiplicity profile violated at facet " + std::to_string(f));
  }
  if (bad_profiles > 0) rep.profile_ok = false;

  rep.class_graphs.resize(classes);
  {
    UnionFind all(poset.count(0));
    for (std::uint32_t v = 0; v < poset.count(0); ++v) ++rep.class_graphs[static_cast<std::size_t>(labels[v])].vertices;
    for (std::uint32_t e = 0; e < poset.count(1); ++e) {
      const auto vs = poset.vertices(1, e);
      if (labels[vs[0]] != labels[vs[1]]) continue;
      ++rep.class_graphs[static_cast<std::size_t>(labels[vs[0]])].edges;
      all.unite(vs[0], vs[1]);
    }
    std::vector<std::set<std::uint32_t>> roots(classes);
    for (std::uint32_t v = 0; v < poset.count(0); ++v) roots[static_cast<std::size_t>(labels[v])].insert(all.find(v));
    for (std::size_t i = 0; i < classes; ++i) {
      rep.class_graphs[i].connected = roots[i].size() == 1;
      if (!rep.class_graphs[i].connected) rep.diagnostics.push_back("class graph " + std::to_string(i) + " disconnected");
    }
  }

  bool spines_ok = true;
  bool generalized_ok = true;
  if (k > kMaxClassesForSubsets) {
    rep.diagnostics.push_back("too many classes for subset enumeration");
    spines_ok = generalized_ok = false;
  } else {
    const std::uint32_t full = (1U << classes) - 1;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = 1; s <= full; ++s) masks.push_back(s);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });
    for (std::uint32_t s : masks) {
      const CellComplex c = extract(ambient, s);
      SubsetReport sr;
      sr.mask = s;
      for (std::size_t i = 0; i < classes; ++i) {
        if (s >> i & 1U) sr.classes.push_back(static_cast<int>(i));
      }
      sr.nonempty = !c.empty();
      sr.connected = components(c) == 1;
      sr.dimension = c.dimension();
      sr.counts = c.counts();
      sr.collapsed_dimension = collapse(c).dimension;
      const int r = std::popcount(s);
      const std::string name = "subset " + class_list(sr.classes);
      if (s == full) {
        const CellSummary cs = cell_summary(c);
        rep.central_closed = cs.closed;
        rep.central_connected = cs.connected;
        if (!cs.closed) rep.diagnostics.push_back("central complex not closed");
        if (!cs.connected) rep.diagnostics.push_back("central complex disconnected");
      } else {
        if (!sr.nonempty) {
          rep.diagnostics.push_back(name + " empty");
          spines_ok = generalized_ok = false;
        } else if (!sr.connected) {
          rep.diagnostics.push_back(name + " disconnected");
          spines_ok = false;
        }
        if (sr.nonempty && sr.collapsed_dimension > multisection_spine_bound(n, k, r)) {
          rep.diagnostics.push_back(name + " spine dimension " + std::to_string(sr.collapsed_dimension) +
                                    " exceeds " + std::to_string(multisection_spine_bound(n, k, r)));
          spines_ok = false;
        }
        if (sr.nonempty && sr.collapsed_dimension > n - r - 1) generalized_ok = false;
      }
      rep.subsets.push_back(std::move(sr));
    }
  }
  const bool graphs_ok = std::all_of(rep.class_graphs.begin(), rep.class_graphs.end(),
                                     [](const ClassGraph& g) { return g.connected; });
  rep.supports_multisection =
      rep.profile_ok && graphs_ok && spines_ok && rep.central_closed && rep.central_connected;
  rep.supports_generalized = generalized_ok;
  if (n == 4 && k == 2) four_dimensional_link_diagnostics(a, rep.diagnostics);
  return rep;
}

ValidationReport validate(const Triangulation& t, const VertexPartition& p) { return validate(make_ambient(t, p)); }

namespace {

void require_even_connected(const Triangulation& t) {
  if (!is_even(FacePoset(t))) throw PreconditionError("symmetric representation undefined: triangulation is not even");
  if (dual_components(t) != 1) throw PreconditionError("symmetric representation undefined: triangulation is disconnected");
}

// λ_t = λ_f ∘ π⁻¹ across a gluing.
Perm reflect(std::span<const Corner> lambda, std::span<const Corner> pi) { return compose(lambda, inverse(pi)); }

}  // namespace

SymRep symmetric_representation(const Triangulation& t) {
  require_even_connected(t);
  const std::size_t m = t.size();
  const auto c = static_cast<std::size_t>(t.corners());
  std::vector<Perm> lambda(m);
  lambda[0] = identity_perm(t.corners());
  std::vector<char> done(m, 0);
  done[0] = 1;
  std::deque<FacetId> queue{0};
  std::set<Perm> gens;
  while (!queue.empty()) {
    const FacetId f = queue.front();
    queue.pop_front();
    for (int i = 0; i < t.corners(); ++i) {
      const FacetId g = t.target(f, i);
      Perm expect = reflect(lambda[f], t.gluing(f, i));
      if (!done[g]) {
        done[g] = 1;
        lambda[g] = std::move(expect);
        queue.push_back(g);
      }
    }
  }
  for (FacetId f = 0; f < m; ++f) {
    for (int i = 0; i < t.corners(); ++i) {
      const FacetId g = t.target(f, i);
      const Perm expect = reflect(lambda[f], t.gluing(f, i));
      Perm gen = compose(expect, inverse(lambda[g]));
      if (!is_identity(gen)) gens.insert(std::move(gen));
    }
  }
  SymRep r;
  r.base = 0;
  r.trivial = gens.empty();
  r.generators.assign(gens.begin(), gens.end());
  r.labeling.reserve(m * c);
  for (const auto& l : lambda) r.labeling.insert(r.labeling.end(), l.begin(), l.end());
  UnionFind uf(c);
  for (const auto& g : r.generators) {
    for (std::size_t x = 0; x < c; ++x) uf.unite(static_cast<std::uint32_t>(x), g[x]);
  }
  std::map<std::uint32_t, std::vector<int>> orbits;
  for (std::size_t x = 0; x < c; ++x) orbits[uf.find(static_cast<std::uint32_t>(x))].push_back(static_cast<int>(x));
  for (auto& [root, orbit] : orbits) r.orbits.push_back(std::move(orbit));
  std::sort(r.orbits.begin(), r.orbits.end());
  return r;
}

LabelingCover labeling_cover(const Triangulation& t) {
  require_even_connected(t);
  const auto c = static_cast<std::size_t>(t.corners());
  const std::uint64_t flags = factorial(t.corners());
  std::unordered_map<std::uint64_t, FacetId> index;
  std::vector<std::pair<FacetId, Perm>> nodes;
  auto visit = [&](FacetId f, Perm lambda) {
    const std::uint64_t code = f * flags + perm_rank(lambda);
    const auto [it, fresh] = index.emplace(code, static_cast<FacetId>(nodes.size()));
    if (fresh) nodes.emplace_back(f, std::move(lambda));
    return it->second;
  };
  visit(0, identity_perm(t.corners()));
  std::vector<FacetId> targets;
  std::vector<Corner> perms;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    for (int i = 0; i < t.corners(); ++i) {
      const FacetId f = nodes[j].first;
      const auto pi = t.gluing(f, i);
      Perm next = reflect(nodes[j].second, pi);
      const FacetId to = visit(t.target(f, i), std::move(next));
      targets.push_back(to);
      perms.insert(perms.end(), pi.begin(), pi.end());
    }
  }
  LabelingCover cover{Triangulation(t.dimension(), std::move(targets), std::move(perms)), nodes.size() / t.size(), {}};
  std::vector<Corner> labels;
  labels.reserve(nodes.size() * c);
  for (const auto& [f, lambda] : nodes) {
    cover.projection.push_back(f);
    labels.insert(labels.end(), lambda.begin(), lambda.end());
  }
  cover.triangulation = cover.triangulation.with_corner_labels(std::move(labels));
  return cover;
}

Admissibility twisted_admissible(const Triangulation& t, const std::vector<int>& block_of_label, const SymRep& r) {
  const auto c = static_cast<std::size_t>(t.corners());
  if (block_of_label.size() != c || r.labeling.size() != t.size() * c) {
    throw PreconditionError("block labeling is not expressed over the representation's labels");
  }
  const int blocks = *std::max_element(block_of_label.begin(), block_of_label.end()) + 1;
  std::vector<int> block_size(static_cast<std::size_t>(std::max(blocks, 0)), 0);
  for (int b : block_of_label) {
    if (b < 0) throw PreconditionError("block labeling is not expressed over the representation's labels");
    ++block_size[static_cast<std::size_t>(b)];
  }
  if (std::count(block_size.begin(), block_size.end(), 0) != 0) {
    throw PreconditionError("block labeling skips a block index");
  }
  Admissibility out;
  out.admissible = true;
  out.block_action_trivial = true;
  for (const auto& g : r.generators) {
    std::vector<int> image(static_cast<std::size_t>(blocks), -1);
    for (std::size_t x = 0; x < c; ++x) {
      const int from = block_of_label[x];
      const int to = block_of_label[g[x]];
      int& slot = image[static_cast<std::size_t>(from)];
      if (slot != -1 && slot != to) {
        out.admissible = false;
        out.reason = "a block image straddles two blocks";
      }
      slot = to;
    }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.admissible = false;
      if (out.reason.empty()) out.reason = "two blocks map to the same block";
    }
    for (int b = 0; b < blocks; ++b) {
      if (image[static_cast<std::size_t>(b)] != b) out.block_action_trivial = false;
    }
    out.block_action.push_back(std::move(image));
  }
  if (!out.admissible) {
    out.block_action.clear();
    out.block_action_trivial = false;
  }
  const VertexClasses vc(t);
  UnionFind uf(vc.count());
  for (FacetId f = 0; f < t.size(); ++f) {
    for (std::size_t x = 0; x < c; ++x) {
      for (std::size_t y = x + 1; y < c; ++y) {
        if (block_of_label[r.labeling[f * c + x]] == block_of_label[r.labeling[f * c + y]]) {
          uf.unite(vc.of(f, static_cast<int>(x)), vc.of(f, static_cast<int>(y)));
        }
      }
    }
  }
  out.union_graph_connected = uf.components() == 1;
  return out;
}

}  // namespace multisect
