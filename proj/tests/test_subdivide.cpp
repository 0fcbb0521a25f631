#include <doctest.h>

#include <set>

#include "multisect/complex.hpp"
#include "multisect/error.hpp"
#include "multisect/partition.hpp"
#include "multisect/permutation.hpp"
#include "multisect/subdivide.hpp"
#include "multisect/zoo.hpp"
#include "oracles.hpp"

using namespace multisect;

namespace {

VertexPartition even_bary(const Subdivision& s) {
  SchemeAux aux;
  aux.carriers = s.carriers;
  return scheme_partition(s.triangulation, Scheme::EvenBary, aux);
}

}  // namespace

TEST_CASE("barycentric facet and carrier census") {
  const Subdivision s = barycentric(double_simplex(3));
  CHECK(s.triangulation.size() == 48);
  std::vector<int> census(4, 0);
  for (int d : s.carriers.dim) ++census[static_cast<std::size_t>(d)];
  CHECK(census == std::vector<int>{4, 6, 4, 2});
  CHECK(barycentric(double_simplex(4)).triangulation.size() == 240);
  CHECK(barycentric(barycentric(double_simplex(2)).triangulation).triangulation.size() == 72);
}

TEST_CASE("barycentric preserves homology and is simplicial with rainbow facets") {
  const std::vector<Triangulation> zoo{double_simplex(2), double_simplex(3), cross_projective(2),
                                       cross_projective(3), simplex_boundary(3)};
  for (const auto& t : zoo) {
    const Subdivision s = barycentric(t);
    const FacePoset p(s.triangulation);
    const TriSummary before = summarize(t);
    const TriSummary after = summarize(s.triangulation, p);
    CHECK(after.euler == before.euler);
    CHECK(after.betti == before.betti);
    CHECK(is_simplicial(p));
    // Bipartite dual graph and orientability go together after subdivision.
    CHECK(dual_graph(s.triangulation).coloring.has_value() == before.orientable);
    std::size_t faces = 0;
    for (auto c : before.counts) faces += c;
    CHECK(after.counts[0] == faces);
    for (FacetId f = 0; f < s.triangulation.size(); ++f) {
      std::set<int> dims;
      for (int c = 0; c < s.triangulation.corners(); ++c) dims.insert(s.carriers.dim[p.vertex_of(f, c)]);
      CHECK(dims.size() == static_cast<std::size_t>(s.triangulation.corners()));
    }
  }
}

TEST_CASE("barycentric refuses past the ceiling") {
  Limits tight;
  tight.max_facets = 100;
  CHECK_THROWS_WITH_AS(barycentric(double_simplex(4), tight), doctest::Contains("subdivision too large"),
                       ResourceError);
}

TEST_CASE("pachner pass on the subdivided doubled 4-simplex") {
  const Subdivision s = barycentric(double_simplex(4));
  const VertexPartition p = even_bary(s);
  const PachnerResult r = pachner_2n_pass(s.triangulation, p);
  CHECK(r.triangulation.size() == 480);
  const FacePoset poset(r.triangulation);
  CHECK(poset.count(0) == p.labels.size());
  CHECK(r.partition.class_sizes() == p.class_sizes());
  const TriSummary before = summarize(s.triangulation);
  const TriSummary after = summarize(r.triangulation, poset);
  CHECK(after.euler == before.euler);
  CHECK(after.betti == before.betti);
  for (FacetId f = 0; f < r.triangulation.size(); ++f) {
    std::vector<int> profile(3, 0);
    for (int c = 0; c < 5; ++c) ++profile[static_cast<std::size_t>(r.partition.labels[poset.vertex_of(f, c)])];
    CHECK(profile[2] == 2);
    const auto singles = std::count(profile.begin(), profile.end(), 1);
    CHECK(singles == 1);
  }
}

TEST_CASE("pachner pass on subdivided projective 4-space") {
  const Subdivision s = barycentric(cross_projective(4));
  CHECK(s.triangulation.size() == 1920);
  const PachnerResult r = pachner_2n_pass(s.triangulation, even_bary(s));
  CHECK(r.triangulation.size() == 3840);
  CHECK(summarize(r.triangulation).euler == 1);
}

TEST_CASE("pachner pass rejects coinciding apexes") {
  SchemeAux aux;
  aux.blocks = {{0, 1}, {2, 3}, {4}};
  const Triangulation t = double_simplex(4);
  const VertexPartition p = scheme_partition(t, Scheme::Pairs, aux);
  CHECK_THROWS_AS(pachner_2n_pass(t, p), PreconditionError);
}

TEST_CASE("pachner pass rejects odd dimension") {
  SchemeAux aux;
  aux.blocks = {{0, 1}, {2, 3}};
  const Triangulation t = double_simplex(3);
  CHECK_THROWS(pachner_2n_pass(t, scheme_partition(t, Scheme::Pairs, aux)));
}

TEST_CASE("stellar subdivision of a facet") {
  const Triangulation a = stellar_facet(double_simplex(3), 0);
  CHECK(a.size() == 5);
  CHECK(FacePoset(a).count(0) == 5);
  const Triangulation b = stellar_facet(double_simplex(4), 1);
  CHECK(b.size() == 6);
  const Triangulation c = stellar_facet(b, 5);
  CHECK(c.size() == 10);
  CHECK(summarize(c).euler == 2);
  CHECK(summarize(c).betti == summarize(double_simplex(4)).betti);
  CHECK_THROWS(stellar_facet(b, 6));
}

TEST_CASE("join of vertex-format spheres") {
  const Triangulation sq = cross_sphere(1);
  CHECK(sq.size() == 4);
  const Triangulation j = join(sq, sq);
  CHECK(j.size() == 16);
  CHECK(j.dimension() == 3);
  CHECK(FacePoset(j).counts() == oracle::orthant_counts(3));
  const Triangulation tri = join(simplex_boundary(1), simplex_boundary(1));
  CHECK(tri.size() == 9);
  CHECK(summarize(tri).euler == 0);
  CHECK_THROWS_WITH(join(double_simplex(3), sq), doctest::Contains("join requires simplicial vertex format"));
}
