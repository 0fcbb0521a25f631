#include "multisect/subdivide.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "multisect/error.hpp"
#include "multisect/face_poset.hpp"

namespace multisect {

Subdivision barycentric(const Triangulation& t, const Limits& limits) {
  const int n = t.dimension();
  const auto c = static_cast<std::size_t>(n + 1);
  if (n + 1 > 20) throw ResourceError("subdivision too large");
  const std::uint64_t flags = factorial(n + 1);
  const std::uint64_t m = t.size();
  if (flags > limits.max_facets / std::max<std::uint64_t>(m, 1) || m * flags > limits.max_facets) {
    throw ResourceError("subdivision too large: " + std::to_string(m) + " x " + std::to_string(flags) +
                        " facets exceeds ceiling " + std::to_string(limits.max_facets));
  }
  const std::size_t total = m * flags;
  std::vector<FacetId> targets(total * c);
  std::vector<Corner> perms(total * c * c);
  const Perm id = identity_perm(n + 1);
  auto set_slot = [&](std::size_t facet, std::size_t slot, std::size_t to) {
    targets[facet * c + slot] = static_cast<FacetId>(to);
    std::copy(id.begin(), id.end(), perms.begin() + static_cast<std::ptrdiff_t>((facet * c + slot) * c));
  };
  for (std::uint64_t r = 0; r < flags; ++r) {
    const Perm sigma = perm_unrank(r, n + 1);
    for (std::size_t f = 0; f < m; ++f) {
      const std::size_t here = f * flags + r;
      for (std::size_t j = 0; j + 1 < c; ++j) {
        Perm swapped = sigma;
        std::swap(swapped[j], swapped[j + 1]);
        set_slot(here, j, f * flags + perm_rank(swapped));
      }
      const int last = sigma[c - 1];
      const FacetId g = t.target(static_cast<FacetId>(f), last);
      const Perm moved = compose(t.gluing(static_cast<FacetId>(f), last), sigma);
      set_slot(here, c - 1, g * flags + perm_rank(moved));
    }
  }
  Triangulation out(n, std::move(targets), std::move(perms));
  const VertexClasses vc(out);
  CarrierLabels carriers;
  carriers.dim.resize(vc.count());
  carriers.top_facet.assign(vc.count(), -1);
  for (std::uint32_t v = 0; v < vc.count(); ++v) {
    const FaceKey key = vc.key(v);
    const int j = std::countr_zero(key.mask);
    carriers.dim[v] = j;
    if (j == n) carriers.top_facet[v] = static_cast<std::int64_t>(key.facet / flags);
  }
  return {std::move(out), std::move(carriers)};
}

namespace {

struct Home {
  FacetId facet;
  Perm map;  // old corner -> position in the new facet
};

}  // namespace

PachnerResult pachner_2n_pass(const Triangulation& t, const VertexPartition& p) {
  const int n = t.dimension();
  if (n % 2 != 0 || n < 4) throw PreconditionError("pachner pass requires even dimension n >= 4");
  const int k = n / 2;
  if (p.k != k) throw PreconditionError("pachner pass requires a partition with k = n/2");
  const VertexClasses vc(t);
  if (p.labels.size() != vc.count()) throw PreconditionError("partition does not cover the vertex classes");
  const std::size_t m = t.size();
  const auto c = static_cast<std::size_t>(n + 1);

  std::vector<int> apex(m, -1);
  for (FacetId f = 0; f < m; ++f) {
    int found = 0;
    for (int x = 0; x <= n; ++x) {
      if (p.labels[vc.of(f, x)] == k) {
        apex[f] = x;
        ++found;
      }
    }
    if (found != 1) {
      throw PreconditionError("facet " + std::to_string(f) + " has " + std::to_string(found) + " class-" +
                              std::to_string(k) + " corners; expected exactly one");
    }
  }
  // first[f] = f for the lower facet of a pair; pair_index numbers pairs.
  std::vector<FacetId> partner(m);
  std::vector<std::size_t> pair_index(m);
  std::size_t pairs = 0;
  for (FacetId f = 0; f < m; ++f) {
    const FacetId g = t.target(f, apex[f]);
    if (g == f) throw PreconditionError("facet " + std::to_string(f) + " is glued to itself across its class-free face");
    if (vc.of(f, apex[f]) == vc.of(g, apex[g])) {
      throw PreconditionError("degenerate double simplex at facets " + std::to_string(std::min(f, g)) + "," +
                              std::to_string(std::max(f, g)) + ": apexes coincide");
    }
    partner[f] = g;
    if (f < g) pair_index[f] = pairs++;
  }
  for (FacetId f = 0; f < m; ++f) {
    if (f > partner[f]) pair_index[f] = pair_index[partner[f]];
  }

  auto new_index = [&](FacetId first, int alpha) {
    const int a = apex[first];
    return static_cast<FacetId>(pair_index[first] * static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(alpha < a ? alpha : alpha - 1));
  };
  // Where the face of old facet g opposite corner gamma (not the apex) lives.
  auto home = [&](FacetId g, int gamma) -> Home {
    if (g < partner[g]) return {new_index(g, gamma), identity_perm(n + 1)};
    const FacetId f = partner[g];
    const auto pi = t.gluing(f, apex[f]);
    const Perm inv = inverse(pi);
    const int alpha = inv[static_cast<std::size_t>(gamma)];
    Perm mu(c);
    for (int y = 0; y <= n; ++y) {
      if (y == apex[g]) {
        mu[static_cast<std::size_t>(y)] = static_cast<Corner>(alpha);
      } else if (y == gamma) {
        mu[static_cast<std::size_t>(y)] = static_cast<Corner>(apex[f]);
      } else {
        mu[static_cast<std::size_t>(y)] = inv[static_cast<std::size_t>(y)];
      }
    }
    return {new_index(f, alpha), std::move(mu)};
  };

  const std::size_t total = pairs * static_cast<std::size_t>(n);
  std::vector<FacetId> targets(total * c);
  std::vector<Corner> perms(total * c * c);
  std::vector<std::uint32_t> old_vertex(total * c);
  std::vector<std::int64_t> ids;
  if (t.has_vertex_ids()) ids.resize(total * c);
  auto set_slot = [&](FacetId facet, int slot, FacetId to, const Perm& perm) {
    const std::size_t at = static_cast<std::size_t>(facet) * c + static_cast<std::size_t>(slot);
    targets[at] = to;
    std::copy(perm.begin(), perm.end(), perms.begin() + static_cast<std::ptrdiff_t>(at * c));
  };

  for (FacetId f = 0; f < m; ++f) {
    if (f > partner[f]) continue;
    const FacetId t2 = partner[f];
    const int a = apex[f];
    const auto pi = t.gluing(f, a);
    for (int alpha = 0; alpha <= n; ++alpha) {
      if (alpha == a) continue;
      const FacetId here = new_index(f, alpha);
      for (int y = 0; y <= n; ++y) {
        const std::size_t at = static_cast<std::size_t>(here) * c + static_cast<std::size_t>(y);
        const bool is_q = y == alpha;
        old_vertex[at] = is_q ? vc.of(t2, apex[t2]) : vc.of(f, y);
        if (!ids.empty()) ids[at] = is_q ? t.facet_vertices(t2)[static_cast<std::size_t>(apex[t2])]
                                         : t.facet_vertices(f)[static_cast<std::size_t>(y)];
      }
      for (int beta = 0; beta <= n; ++beta) {
        if (beta == a || beta == alpha) continue;
        Perm swap = identity_perm(n + 1);
        std::swap(swap[static_cast<std::size_t>(alpha)], swap[static_cast<std::size_t>(beta)]);
        set_slot(here, beta, new_index(f, beta), swap);
      }
      {
        // Opposite the new vertex: f's own face opposite alpha.
        const FacetId g = t.target(f, alpha);
        const auto rho = t.gluing(f, alpha);
        const Home h = home(g, rho[static_cast<std::size_t>(alpha)]);
        set_slot(here, alpha, h.facet, compose(h.map, rho));
      }
      {
        // Opposite f's apex: t2's face opposite pi(alpha).
        const int gamma_t = pi[static_cast<std::size_t>(alpha)];
        Perm nu(c);
        for (int y = 0; y <= n; ++y) {
          nu[static_cast<std::size_t>(y)] = y == alpha ? static_cast<Corner>(apex[t2])
                                           : y == a    ? static_cast<Corner>(gamma_t)
                                                       : pi[static_cast<std::size_t>(y)];
        }
        const FacetId g = t.target(t2, gamma_t);
        const auto rho = t.gluing(t2, gamma_t);
        const Home h = home(g, rho[static_cast<std::size_t>(gamma_t)]);
        set_slot(here, a, h.facet, compose(h.map, compose(rho, nu)));
      }
    }
  }

  Triangulation out(n, std::move(targets), std::move(perms), std::move(ids));
  const VertexClasses nvc(out);
  if (nvc.count() != vc.count()) throw Error("pachner pass changed the vertex classes");
  VertexPartition np{k, std::vector<int>(nvc.count(), -1), p.scheme};
  for (FacetId f = 0; f < out.size(); ++f) {
    for (int y = 0; y <= n; ++y) {
      np.labels[nvc.of(f, y)] = p.labels[old_vertex[static_cast<std::size_t>(f) * c + static_cast<std::size_t>(y)]];
    }
  }
  return {std::move(out), std::move(np)};
}

Triangulation stellar_facet(const Triangulation& t, FacetId f) {
  const std::size_t m = t.size();
  if (f >= m) throw InputError("unknown facet " + std::to_string(f));
  const int n = t.dimension();
  const auto c = static_cast<std::size_t>(n + 1);
  const std::size_t total = m + c - 1;
  auto piece = [&](std::size_t j) { return static_cast<FacetId>(j == 0 ? f : m + j - 1); };
  std::vector<FacetId> targets(total * c);
  std::vector<Corner> perms(total * c * c);
  auto set_slot = [&](std::size_t facet, std::size_t slot, FacetId to, std::span<const Corner> perm) {
    targets[facet * c + slot] = to;
    std::copy(perm.begin(), perm.end(), perms.begin() + static_cast<std::ptrdiff_t>((facet * c + slot) * c));
  };
  for (FacetId g = 0; g < m; ++g) {
    if (g == f) continue;
    for (std::size_t s = 0; s < c; ++s) {
      const FacetId h = t.target(g, static_cast<int>(s));
      const auto rho = t.gluing(g, static_cast<int>(s));
      set_slot(g, s, h == f ? piece(rho[s]) : h, rho);
    }
  }
  for (std::size_t j = 0; j < c; ++j) {
    const FacetId here = piece(j);
    const FacetId h = t.target(f, static_cast<int>(j));
    const auto rho = t.gluing(f, static_cast<int>(j));
    set_slot(here, j, h == f ? piece(rho[j]) : h, rho);
    for (std::size_t i = 0; i < c; ++i) {
      if (i == j) continue;
      Perm swap = identity_perm(n + 1);
      std::swap(swap[i], swap[j]);
      set_slot(here, i, piece(i), swap);
    }
  }
  std::vector<std::int64_t> ids;
  if (t.has_vertex_ids()) {
    ids.resize(total * c);
    std::int64_t fresh = 0;
    for (FacetId g = 0; g < m; ++g) {
      const auto v = t.facet_vertices(g);
      std::copy(v.begin(), v.end(), ids.begin() + static_cast<std::ptrdiff_t>(g * c));
      for (auto x : v) fresh = std::max(fresh, x + 1);
    }
    for (std::size_t j = 0; j < c; ++j) {
      const auto v = t.facet_vertices(f);
      std::copy(v.begin(), v.end(), ids.begin() + static_cast<std::ptrdiff_t>(piece(j) * c));
      ids[piece(j) * c + j] = fresh;
    }
  }
  return Triangulation(n, std::move(targets), std::move(perms), std::move(ids));
}

Triangulation join(const Triangulation& a, const Triangulation& b) {
  if (!a.has_vertex_ids() || !b.has_vertex_ids()) throw PreconditionError("join requires simplicial vertex format");
  auto relabel = [](const Triangulation& t, std::int64_t offset) {
    std::map<std::int64_t, std::int64_t> ids;
    for (FacetId f = 0; f < t.size(); ++f) {
      for (auto v : t.facet_vertices(f)) ids.emplace(v, 0);
    }
    std::int64_t next = offset;
    for (auto& [id, label] : ids) label = next++;
    return std::pair{ids, next};
  };
  const auto [ida, end_a] = relabel(a, 0);
  const auto [idb, end_b] = relabel(b, end_a);
  (void)end_b;
  const int n = a.dimension() + b.dimension() + 1;
  std::vector<std::int64_t> ids;
  ids.reserve(a.size() * b.size() * static_cast<std::size_t>(n + 1));
  for (FacetId fa = 0; fa < a.size(); ++fa) {
    for (FacetId fb = 0; fb < b.size(); ++fb) {
      for (auto v : a.facet_vertices(fa)) ids.push_back(ida.at(v));
      for (auto v : b.facet_vertices(fb)) ids.push_back(idb.at(v));
    }
  }
  return from_vertex_facets(n, std::move(ids));
}

}  // namespace multisect
