#include "multisect/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "multisect/union_find.hpp"

namespace multisect {

namespace {

// Breadth-first encoding of the component of start, with the start
// facet's corner x relabeled to rho[x].
std::vector<std::uint32_t> encode(const Triangulation& t, FacetId start, const Perm& rho) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> id(t.size(), kNone);
  std::vector<Perm> relabel(t.size());
  std::vector<FacetId> order{start};
  id[start] = 0;
  relabel[start] = rho;
  std::vector<std::uint32_t> code;
  for (std::size_t next = 0; next < order.size(); ++next) {
    const FacetId f = order[next];
    const Perm back = inverse(relabel[f]);
    for (int j = 0; j < t.corners(); ++j) {
      const int i = back[static_cast<std::size_t>(j)];
      const FacetId g = t.target(f, i);
      const auto pi = t.gluing(f, i);
      if (id[g] == kNone) {
        id[g] = static_cast<std::uint32_t>(order.size());
        order.push_back(g);
        relabel[g] = compose(relabel[f], inverse(pi));
      }
      code.push_back(id[g]);
      const Perm glued = compose(relabel[g], compose(pi, back));
      code.insert(code.end(), glued.begin(), glued.end());
    }
  }
  return code;
}

}  // namespace

std::string isomorphism_signature(const Triangulation& t) {
  UnionFind uf(t.size());
  for (FacetId f = 0; f < t.size(); ++f) {
    for (int i = 0; i < t.corners(); ++i) uf.unite(f, t.target(f, i));
  }
  std::map<std::uint32_t, std::vector<FacetId>> comps;
  for (FacetId f = 0; f < t.size(); ++f) comps[uf.find(f)].push_back(f);
  const std::uint64_t flags = factorial(t.corners());
  std::vector<std::string> parts;
  for (const auto& [root, facets] : comps) {
    std::vector<std::uint32_t> best;
    for (FacetId f : facets) {
      for (std::uint64_t r = 0; r < flags; ++r) {
        auto code = encode(t, f, perm_unrank(r, t.corners()));
        if (best.empty() || code < best) best = std::move(code);
      }
    }
    std::ostringstream out;
    out << facets.size() << ':';
    for (auto x : best) out << x << '.';
    parts.push_back(out.str());
  }
  std::sort(parts.begin(), parts.end());
  std::ostringstream out;
  out << "d" << t.dimension();
  for (const auto& p : parts) out << '|' << p;
  return out.str();
}

std::vector<Simplex> canonical_simplices(std::size_t vertices, const std::vector<Simplex>& simplices) {
  // Degree profile per vertex: number of simplices of each size holding it.
  std::size_t widest = 0;
  for (const auto& s : simplices) widest = std::max(widest, s.size());
  std::vector<std::vector<std::size_t>> profile(vertices, std::vector<std::size_t>(widest + 1, 0));
  for (const auto& s : simplices) {
    for (auto v : s) ++profile[v][s.size()];
  }
  // Vertices are relabeled in order of increasing profile; only orders
  // within equal-profile groups are enumerated.
  std::vector<std::uint32_t> order(vertices);
  for (std::uint32_t v = 0; v < vertices; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return profile[a] < profile[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < vertices;) {
    std::size_t j = i;
    while (j < vertices && profile[order[j]] == profile[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : groups) std::sort(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e));

  std::vector<Simplex> best;
  bool have = false;
  std::vector<std::uint32_t> label(vertices);
  while (true) {
    for (std::uint32_t i = 0; i < vertices; ++i) label[order[i]] = i;
    std::vector<Simplex> image;
    image.reserve(simplices.size());
    for (const auto& s : simplices) {
      Simplex x;
      for (auto v : s) x.push_back(label[v]);
      std::sort(x.begin(), x.end());
      image.push_back(std::move(x));
    }
    std::sort(image.begin(), image.end());
    if (!have || image < best) {
      best = std::move(image);
      have = true;
    }
    // Next combination of per-group permutations, odometer style.
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto b = order.begin() + static_cast<std::ptrdiff_t>(groups[g].first);
      auto e = order.begin() + static_cast<std::ptrdiff_t>(groups[g].second);
      if (std::next_permutation(b, e)) break;
    }
    if (g == groups.size()) break;
  }
  return best;
}

}  // namespace multisect
