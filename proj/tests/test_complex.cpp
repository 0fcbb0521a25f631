#include <doctest.h>

#include "multisect/complex.hpp"
#include "multisect/error.hpp"
#include "multisect/io.hpp"
#include "multisect/permutation.hpp"
#include "multisect/subdivide.hpp"
#include "multisect/zoo.hpp"
#include "oracles.hpp"

using namespace multisect;

namespace {

Triangulation load_fixture(const std::string& name) {
  return read_document_file(std::string(MULTISECT_TEST_DATA) + "/" + name).triangulation;
}

}  // namespace

TEST_CASE("summaries of spheres and projective spaces") {
  for (int n = 2; n <= 5; ++n) {
    const TriSummary s = summarize(double_simplex(n));
    CHECK(s.euler == (n % 2 == 0 ? 2 : 0));
    CHECK(s.connected);
    CHECK(s.pseudo_manifold);
    CHECK(s.orientable);
    CHECK(s.even);
  }
  const TriSummary rp3 = summarize(cross_projective(3));
  CHECK(rp3.euler == 0);
  CHECK(rp3.orientable);
  CHECK(rp3.betti == std::vector<std::size_t>{1, 1, 1, 1});
  const TriSummary rp4 = summarize(cross_projective(4));
  CHECK(rp4.euler == 1);
  CHECK_FALSE(rp4.orientable);
  CHECK(summarize(simplex_boundary(3)).even == false);
}

TEST_CASE("betti numbers match dense oracle") {
  const std::vector<Triangulation> zoo{double_simplex(3), cross_sphere(3), cross_projective(3), cross_projective(4),
                                       simplex_boundary(4), load_fixture("twisted_chain.tri"),
                                       barycentric(cross_projective(2)).triangulation};
  for (const auto& t : zoo) {
    const TriSummary s = summarize(t);
    CHECK(s.betti == oracle::naive_betti(t));
    std::int64_t alt = 0;
    for (std::size_t d = 0; d < s.betti.size(); ++d) alt += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(s.betti[d]);
    CHECK(alt == s.euler);
  }
}

TEST_CASE("orientation is consistent across every gluing") {
  const Triangulation t = barycentric(cross_sphere(2)).triangulation;
  const auto o = facet_orientation(t);
  REQUIRE(o);
  for (FacetId f = 0; f < t.size(); ++f) {
    for (int s = 0; s < t.corners(); ++s) {
      CHECK((*o)[t.target(f, s)] == -sign(t.gluing(f, s)) * (*o)[f]);
    }
  }
  CHECK_FALSE(facet_orientation(cross_projective(2)));
}

TEST_CASE("link of a vertex in the crosspolytope is a crosspolytope") {
  const Triangulation t = cross_sphere(3);
  const FacePoset p(t);
  const Link lk = link(t, p, FaceKey{0, 1});
  CHECK(lk.triangulation.size() == 8);
  CHECK(FacePoset(lk.triangulation).counts() == oracle::orthant_counts(2));
  CHECK(lk.source.size() == 8);
  CHECK_THROWS_AS(link(t, p, FaceKey{0, 0b0111}), PreconditionError);
}

TEST_CASE("link of an edge in the doubled 4-simplex is a doubled triangle") {
  const Triangulation t = double_simplex(4);
  const FacePoset p(t);
  const Link lk = link(t, p, FaceKey{0, 0b00011});
  CHECK(lk.triangulation.size() == 2);
  CHECK(summarize(lk.triangulation).euler == 2);
}

TEST_CASE("dual graph and bipartiteness") {
  const DualGraph g = dual_graph(barycentric(double_simplex(3)).triangulation);
  CHECK(g.nodes == 48);
  CHECK(g.edges.size() == 48 * 4 / 2);
  CHECK(g.connected);
  CHECK(g.coloring.has_value());
  CHECK_FALSE(dual_graph(simplex_boundary(2)).coloring.has_value());
  CHECK(dual_components(double_simplex(3)) == 1);
}

TEST_CASE("orientation double cover") {
  SUBCASE("non-orientable input gives a connected orientable cover") {
    const Triangulation rp4 = cross_projective(4);
    const DoubleCover c = orientation_double_cover(rp4);
    CHECK(c.triangulation.size() == 2 * rp4.size());
    const TriSummary s = summarize(c.triangulation);
    CHECK(s.connected);
    CHECK(s.orientable);
    CHECK(s.euler == 2 * summarize(rp4).euler);
    for (FacetId f = 0; f < c.deck.size(); ++f) CHECK(c.deck[c.deck[f]] == f);
  }
  SUBCASE("orientable input gives two copies") {
    const DoubleCover c = orientation_double_cover(cross_projective(3));
    CHECK(dual_components(c.triangulation) == 2);
  }
}

TEST_CASE("fixture with twisted gluing is an even projective plane") {
  const TriSummary s = summarize(load_fixture("twisted_chain.tri"));
  CHECK(s.euler == 1);
  CHECK(s.even);
  CHECK(s.connected);
  CHECK_FALSE(s.orientable);
}
