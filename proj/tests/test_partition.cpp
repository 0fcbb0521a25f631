#include <doctest.h>

#include <algorithm>

#include "multisect/complex.hpp"
#include "multisect/error.hpp"
#include "multisect/io.hpp"
#include "multisect/partition.hpp"
#include "multisect/subdivide.hpp"
#include "multisect/zoo.hpp"

using namespace multisect;

namespace {

Triangulation twisted_fixture() {
  return read_document_file(std::string(MULTISECT_TEST_DATA) + "/twisted_chain.tri").triangulation;
}

VertexPartition pairs(const Triangulation& t, std::vector<std::vector<int>> blocks) {
  SchemeAux aux;
  aux.blocks = std::move(blocks);
  return scheme_partition(t, Scheme::Pairs, aux);
}

VertexPartition from_carriers(const Subdivision& s, Scheme scheme) {
  SchemeAux aux;
  aux.carriers = s.carriers;
  return scheme_partition(s.triangulation, scheme, aux);
}

std::vector<int> profile(const Triangulation& t, const FacePoset& p, const VertexPartition& part, FacetId f) {
  std::vector<int> out(static_cast<std::size_t>(part.k + 1), 0);
  for (int c = 0; c < t.corners(); ++c) ++out[static_cast<std::size_t>(part.labels[p.vertex_of(f, c)])];
  return out;
}

}  // namespace

TEST_CASE("scheme names") {
  for (Scheme s : {Scheme::OddBary, Scheme::EvenBary, Scheme::EvenNpc, Scheme::Pairs, Scheme::Explicit}) {
    CHECK(parse_scheme(scheme_name(s)) == s);
  }
  CHECK_THROWS_AS(parse_scheme("odd"), InputError);
  CHECK(parse_blocks("0,1/2,3/4") == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4}});
  CHECK_THROWS_AS(parse_blocks("0,,1"), InputError);
}

TEST_CASE("odd-bary partition") {
  const Subdivision s = barycentric(double_simplex(3));
  const VertexPartition p = from_carriers(s, Scheme::OddBary);
  CHECK(p.k == 1);
  CHECK(p.class_sizes() == std::vector<std::size_t>{10, 6});
  const FacePoset poset(s.triangulation);
  for (FacetId f = 0; f < s.triangulation.size(); ++f) {
    CHECK(profile(s.triangulation, poset, p, f) == std::vector<int>{2, 2});
  }
  const Subdivision s5 = barycentric(cross_projective(5));
  const VertexPartition p5 = from_carriers(s5, Scheme::OddBary);
  const FacePoset poset5(s5.triangulation);
  for (FacetId f = 0; f < s5.triangulation.size(); f += 97) {
    CHECK(profile(s5.triangulation, poset5, p5, f) == std::vector<int>{2, 2, 2});
  }
}

TEST_CASE("scheme parity and aux errors") {
  const Subdivision s = barycentric(double_simplex(3));
  CHECK_THROWS_AS(from_carriers(s, Scheme::EvenBary), PreconditionError);
  CHECK_THROWS_AS(scheme_partition(s.triangulation, Scheme::OddBary, SchemeAux{}), PreconditionError);
  CHECK_THROWS_AS(scheme_partition(s.triangulation, Scheme::EvenNpc, SchemeAux{}), PreconditionError);
  CHECK_THROWS_AS(pairs(double_simplex(3), {{0, 1}, {2, 7}}), PreconditionError);
  CHECK_THROWS_AS(pairs(double_simplex(3), {{0, 1}, {2}}), PreconditionError);
}

TEST_CASE("even-bary partition puts the top barycentres in the last class") {
  const Subdivision s = barycentric(double_simplex(4));
  const VertexPartition p = from_carriers(s, Scheme::EvenBary);
  CHECK(p.k == 2);
  CHECK(p.class_sizes()[2] == 2);
  const PachnerResult r = pachner_2n_pass(s.triangulation, p);
  const FacePoset poset(r.triangulation);
  for (FacetId f = 0; f < r.triangulation.size(); ++f) {
    const auto prof = profile(r.triangulation, poset, r.partition, f);
    CHECK(std::count(prof.begin(), prof.end(), 1) == 1);
    CHECK(prof[2] != 1);
  }
}

TEST_CASE("even-npc singletons land in classes 0 and 1") {
  const Triangulation l = double_simplex(4);
  const Subdivision first = barycentric(l);
  const auto coloring = dual_graph(first.triangulation).coloring;
  REQUIRE(coloring);
  const Subdivision second = barycentric(first.triangulation);
  SchemeAux aux;
  aux.carriers = second.carriers;
  aux.coloring = coloring;
  const VertexPartition p = scheme_partition(second.triangulation, Scheme::EvenNpc, aux);
  CHECK(p.k == 2);
  const FacePoset poset(second.triangulation);
  for (FacetId f = 0; f < second.triangulation.size(); f += 7) {
    const auto prof = profile(second.triangulation, poset, p, f);
    const auto single = std::find(prof.begin(), prof.end(), 1);
    REQUIRE(single != prof.end());
    CHECK(single - prof.begin() <= 1);
    CHECK(std::count(prof.begin(), prof.end(), 1) == 1);
  }
}

TEST_CASE("pairs partition on projective 3-space") {
  const VertexPartition p = pairs(cross_projective(3), {{0, 1}, {2, 3}});
  CHECK(p.class_sizes() == std::vector<std::size_t>{2, 2});
  const ValidationReport v = validate(cross_projective(3), p);
  CHECK(v.supports_multisection);
}

TEST_CASE("validation of doubled simplices") {
  const ValidationReport odd = validate(double_simplex(5), pairs(double_simplex(5), {{0, 1}, {2, 3}, {4, 5}}));
  CHECK(odd.profile_ok);
  CHECK(odd.supports_multisection);
  CHECK(odd.subsets.size() == 7);
  const ValidationReport even = validate(double_simplex(4), pairs(double_simplex(4), {{0, 1}, {2, 3}, {4}}));
  CHECK(even.supports_multisection);
  for (const auto& s : even.subsets) {
    CHECK(s.collapsed_dimension <= multisection_spine_bound(4, 2, static_cast<int>(s.classes.size())));
  }
}

TEST_CASE("spine bound drops when intersecting all but one piece in even dimension") {
  CHECK(multisection_spine_bound(4, 2, 1) == 1);
  CHECK(multisection_spine_bound(4, 2, 2) == 1);
  CHECK(multisection_spine_bound(5, 2, 2) == 2);
  CHECK(multisection_spine_bound(6, 3, 3) == 2);
}

TEST_CASE("generalized partition with an unbalanced class") {
  const Triangulation t = double_simplex(6);
  const VertexPartition p = pairs(t, {{0, 1}, {2, 3}, {4, 5, 6}});
  const ValidationReport v = validate(t, p);
  CHECK(v.supports_generalized);
  CHECK_FALSE(v.supports_multisection);
  CHECK(v.subset(0b001).dimension == 1);
  CHECK(v.subset(0b010).dimension == 1);
  CHECK(v.subset(0b100).dimension == 2);
  for (const auto& s : v.subsets) {
    CHECK(s.nonempty);
    CHECK(s.connected);
  }
}

TEST_CASE("generalized support implies every subset complex is connected") {
  const std::vector<std::pair<Triangulation, std::vector<std::vector<int>>>> cases{
      {cross_projective(3), {{0, 1}, {2, 3}}},
      {cross_projective(5), {{0, 1}, {2, 3}, {4, 5}}},
      {double_simplex(4), {{0, 1}, {2, 3}, {4}}},
      {double_simplex(5), {{0, 1, 2}, {3, 4, 5}}}};
  for (const auto& [t, blocks] : cases) {
    const ValidationReport v = validate(t, pairs(t, blocks));
    if (!v.supports_generalized) continue;
    for (const auto& s : v.subsets) {
      CHECK(s.nonempty);
      CHECK(s.connected);
    }
  }
}

TEST_CASE("disconnected class graph is diagnosed") {
  const Subdivision first = barycentric(double_simplex(2));
  const Subdivision second = barycentric(first.triangulation);
  SchemeAux aux;
  aux.carriers = second.carriers;
  aux.coloring = dual_graph(first.triangulation).coloring;
  const VertexPartition p = scheme_partition(second.triangulation, Scheme::EvenNpc, aux);
  const ValidationReport v = validate(second.triangulation, p);
  CHECK_FALSE(v.class_graphs[1].connected);
  CHECK_FALSE(v.supports_multisection);
  CHECK(std::find(v.diagnostics.begin(), v.diagnostics.end(), "class graph 1 disconnected") != v.diagnostics.end());
}

TEST_CASE("symmetric representation") {
  SUBCASE("barycentric subdivisions are trivial") {
    CHECK(symmetric_representation(barycentric(cross_projective(3)).triangulation).trivial);
    CHECK(symmetric_representation(barycentric(double_simplex(2)).triangulation).trivial);
  }
  SUBCASE("crosspolytope labeling is the coordinate labeling") {
    const Triangulation t = cross_sphere(3);
    const SymRep r = symmetric_representation(t);
    CHECK(r.trivial);
    CHECK(r.labeling == t.corner_labels());
  }
  SUBCASE("odd codimension-2 degree is rejected") {
    CHECK_THROWS_WITH_AS(symmetric_representation(simplex_boundary(3)),
                         doctest::Contains("symmetric representation undefined"), PreconditionError);
  }
  SUBCASE("twisted fixture has a transposition") {
    const SymRep r = symmetric_representation(twisted_fixture());
    CHECK_FALSE(r.trivial);
    REQUIRE(r.generators.size() == 1);
    CHECK(r.generators[0] == Perm{1, 0, 2});
    CHECK(r.orbits == std::vector<std::vector<int>>{{0, 1}, {2}});
  }
}

TEST_CASE("labeling cover") {
  const LabelingCover trivial = labeling_cover(cross_projective(3));
  CHECK(trivial.degree == 1);
  CHECK(trivial.triangulation.size() == 8);
  const Triangulation fixture = twisted_fixture();
  const LabelingCover c = labeling_cover(fixture);
  CHECK(c.degree == 2);
  CHECK(c.triangulation.size() == 2 * fixture.size());
  CHECK(dual_components(c.triangulation) == 1);
  CHECK(symmetric_representation(c.triangulation).trivial);
  CHECK(summarize(c.triangulation).euler == 2);
  for (FacetId f = 0; f < c.triangulation.size(); ++f) CHECK(c.projection[f] < fixture.size());
}

TEST_CASE("twisted admissibility") {
  SUBCASE("trivial representation") {
    const Triangulation t = cross_projective(3);
    const Admissibility a = twisted_admissible(t, {0, 0, 1, 1}, symmetric_representation(t));
    CHECK(a.admissible);
    CHECK(a.block_action_trivial);
  }
  const Triangulation t = twisted_fixture();
  const SymRep r = symmetric_representation(t);
  SUBCASE("blocks swapped by the generator") {
    const Admissibility a = twisted_admissible(t, {0, 1, 2}, r);
    CHECK(a.admissible);
    CHECK_FALSE(a.block_action_trivial);
    REQUIRE(a.block_action.size() == 1);
    CHECK(a.block_action[0] == std::vector<int>{1, 0, 2});
  }
  SUBCASE("block split incompatibly") {
    const Admissibility a = twisted_admissible(t, {0, 1, 0}, r);
    CHECK_FALSE(a.admissible);
    CHECK(a.reason.find("straddles") != std::string::npos);
  }
  SUBCASE("labels outside the alphabet") {
    CHECK_THROWS_AS(twisted_admissible(t, {0, 1}, r), PreconditionError);
  }
}

TEST_CASE("join partition merges the singleton classes") {
  const Triangulation a = cross_sphere(2);
  const Triangulation b = cross_sphere(2);
  const VertexPartition pa = pairs(a, {{0, 1}, {2}});
  const VertexPartition pb = pairs(b, {{0, 1}, {2}});
  const Triangulation j = join(a, b);
  const VertexPartition pj = join_partition(a, pa, b, pb, j);
  CHECK(j.dimension() == 5);
  CHECK(pj.k == 2);
  CHECK(pj.labels.size() == 12);
}
