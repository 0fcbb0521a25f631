#include <doctest.h>

#include <algorithm>
#include <random>

#include "multisect/error.hpp"
#include "multisect/face_poset.hpp"
#include "multisect/gf2.hpp"
#include "multisect/permutation.hpp"
#include "multisect/triangulation.hpp"
#include "multisect/union_find.hpp"
#include "multisect/zoo.hpp"
#include "oracles.hpp"

using namespace multisect;

TEST_CASE("permutation algebra") {
  const Perm a{1, 2, 0, 3};
  const Perm b{0, 1, 3, 2};
  CHECK(compose(a, b) == Perm{1, 2, 3, 0});
  CHECK(compose(a, inverse(a)) == identity_perm(4));
  CHECK(sign(a) == 1);
  CHECK(sign(b) == -1);
  CHECK(sign(compose(a, b)) == sign(a) * sign(b));
  CHECK(is_permutation(a));
  CHECK_FALSE(is_permutation(Perm{0, 0, 1}));
  CHECK(is_identity(identity_perm(5)));
  CHECK(apply_to_mask(a, 0b0011) == 0b0110);
  CHECK(factorial(6) == 720);
}

TEST_CASE("perm rank and unrank are inverse and lexicographic") {
  for (int n = 1; n <= 5; ++n) {
    Perm p = identity_perm(n);
    std::uint64_t r = 0;
    do {
      CHECK(perm_rank(p) == r);
      CHECK(perm_unrank(r, n) == p);
      ++r;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(r == factorial(n));
  }
}

TEST_CASE("union find counts components") {
  UnionFind uf(6);
  CHECK(uf.components() == 6);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(2, 3));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.unite(1, 3));
  CHECK(uf.components() == 3);
  CHECK(uf.find(0) == uf.find(2));
  CHECK(uf.find(4) != uf.find(5));
}

TEST_CASE("triangulation rejects malformed gluings") {
  const Triangulation good = double_simplex(2);
  std::vector<FacetId> targets;
  std::vector<Corner> perms;
  for (FacetId f = 0; f < good.size(); ++f) {
    for (int s = 0; s < good.corners(); ++s) {
      targets.push_back(good.target(f, s));
      for (Corner c : good.gluing(f, s)) perms.push_back(c);
    }
  }
  CHECK_NOTHROW(Triangulation(2, targets, perms));

  SUBCASE("non-involutive target") {
    auto bad = targets;
    bad[0] = 0;
    CHECK_THROWS_AS(Triangulation(2, bad, perms), InputError);
  }
  SUBCASE("perm is not a bijection") {
    auto bad = perms;
    bad[1] = bad[0];
    CHECK_THROWS_AS(Triangulation(2, targets, bad), InputError);
  }
  SUBCASE("slot maps to a different slot than its partner") {
    auto bad = perms;
    std::swap(bad[0], bad[1]);
    CHECK_THROWS_AS(Triangulation(2, targets, bad), InputError);
  }
  SUBCASE("target out of range") {
    auto bad = targets;
    bad[2] = 7;
    CHECK_THROWS_AS(Triangulation(2, bad, perms), InputError);
  }
  SUBCASE("unglued slot") {
    TriangulationBuilder b(2, 2);
    const Perm id = identity_perm(3);
    b.glue(0, 0, 1, id);
    b.glue(0, 1, 1, id);
    CHECK_THROWS_AS(std::move(b).build(), InputError);
  }
}

TEST_CASE("vertex facets pair codimension-one faces") {
  const Triangulation t = simplex_boundary(2);
  CHECK(t.size() == 4);
  CHECK(t.has_vertex_ids());
  CHECK_THROWS_AS(from_vertex_facets(2, {0, 1, 2, 0, 1, 3}), InputError);
}

TEST_CASE("face keys format and parse") {
  const FaceKey k{12, 0b1011};
  CHECK(format_key(k) == "12:0,1,3");
  CHECK(parse_key("12:0,1,3") == k);
  CHECK_THROWS_AS(parse_key("12:"), InputError);
  CHECK_THROWS_AS(parse_key("x:0"), InputError);
  CHECK(key_less({0, 0b100}, {1, 0b1}));
  CHECK(key_less({0, 0b011}, {0, 0b101}));
}

TEST_CASE("face poset counts match breadth-first oracle") {
  const std::vector<Triangulation> zoo{double_simplex(2), double_simplex(4), simplex_boundary(3),
                                       cross_sphere(3),   cross_projective(3), cross_projective(4)};
  for (const auto& t : zoo) {
    const FacePoset p(t);
    const auto naive = oracle::naive_faces(t);
    CHECK(p.counts() == naive.counts);
    for (const auto& [inc, cls] : naive.class_of) {
      const auto d = __builtin_popcount(inc.second) - 1;
      const FaceKey canonical = p.key(d, p.class_of(inc.first, inc.second));
      CHECK(naive.class_of.at({canonical.facet, canonical.mask}) == cls);
    }
  }
}

TEST_CASE("face poset canonical keys are least incarnations") {
  const Triangulation t = cross_projective(3);
  const FacePoset p(t);
  for (int d = 0; d <= 3; ++d) {
    for (std::uint32_t c = 0; c < p.count(d); ++c) {
      for (const FaceKey& inc : p.incarnations(d, c)) CHECK_FALSE(key_less(inc, p.key(d, c)));
      if (c > 0) CHECK(key_less(p.key(d, c - 1), p.key(d, c)));
    }
  }
}

TEST_CASE("vertex classes agree with face poset") {
  const Triangulation t = cross_sphere(3);
  const FacePoset p(t);
  const VertexClasses v(t);
  CHECK(v.count() == p.count(0));
  for (FacetId f = 0; f < t.size(); ++f) {
    for (int c = 0; c < t.corners(); ++c) CHECK(v.of(f, c) == p.vertex_of(f, c));
  }
}

TEST_CASE("simpliciality") {
  CHECK(is_simplicial(FacePoset(simplex_boundary(3))));
  CHECK(is_simplicial(FacePoset(cross_sphere(3))));
  CHECK_FALSE(is_simplicial(FacePoset(double_simplex(3))));
}

TEST_CASE("sparse GF(2) rank matches dense elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 12;
    std::vector<SparseColumn> sparse(cols);
    std::vector<std::vector<std::uint8_t>> dense(cols, std::vector<std::uint8_t>(rows, 0));
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t r = 0; r < rows; ++r) {
        if (rng() % 3 == 0) {
          sparse[c].push_back(static_cast<std::uint32_t>(r));
          dense[c][r] = 1;
        }
      }
    }
    CHECK(gf2_rank(sparse) == oracle::dense_rank(dense));
  }
}

TEST_CASE("normalize cancels pairs") {
  SparseColumn c{5, 1, 5, 3, 1, 1};
  normalize(c);
  CHECK(c == SparseColumn{1, 3});
}
