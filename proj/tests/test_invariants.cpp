#include <doctest.h>

#include "multisect/cells.hpp"
#include "multisect/complex.hpp"
#include "multisect/error.hpp"
#include "multisect/invariants.hpp"
#include "multisect/partition.hpp"
#include "multisect/subdivide.hpp"
#include "multisect/zoo.hpp"

using namespace multisect;

namespace {

std::shared_ptr<const Ambient> pairs_ambient(const Triangulation& t, std::vector<std::vector<int>> blocks) {
  SchemeAux aux;
  aux.blocks = std::move(blocks);
  return make_ambient(t, scheme_partition(t, Scheme::Pairs, aux));
}

std::shared_ptr<const Ambient> bary_s3() {
  const Subdivision s = barycentric(double_simplex(3));
  SchemeAux aux;
  aux.carriers = s.carriers;
  return make_ambient(s.triangulation, scheme_partition(s.triangulation, Scheme::OddBary, aux));
}

std::vector<std::optional<std::int64_t>> genera(std::initializer_list<std::int64_t> xs) {
  std::vector<std::optional<std::int64_t>> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("multisection reports") {
  SUBCASE("trisection of S4 by three balls") {
    const MultisectionReport r = multisection_report(pairs_ambient(double_simplex(4), {{0, 1}, {2, 3}, {4}}));
    CHECK(r.supports_multisection);
    CHECK(r.genera == genera({0, 0, 0}));
    CHECK(r.surface_genus == 0);
    CHECK(r.surface_orientable);
    CHECK(r.trisection_identity == true);
    CHECK(r.inclusion_exclusion_ok);
  }
  SUBCASE("projective 5-space") {
    const MultisectionReport r = multisection_report(pairs_ambient(cross_projective(5), {{0, 1}, {2, 3}, {4, 5}}));
    CHECK(r.genera == genera({1, 1, 1}));
    CHECK(r.inclusion_exclusion_ok);
  }
  SUBCASE("projective 3-space") {
    const MultisectionReport r = multisection_report(pairs_ambient(cross_projective(3), {{0, 1}, {2, 3}}));
    CHECK(r.genera == genera({1, 1}));
    CHECK(r.central.euler == 0);
    CHECK(r.central.orientable == true);
    CHECK(r.surface_genus == 1);
    CHECK_FALSE(r.trisection_identity.has_value());
  }
  SUBCASE("reports are pure") {
    const auto a = bary_s3();
    const MultisectionReport x = multisection_report(a);
    const MultisectionReport y = multisection_report(a);
    CHECK(x.genera == y.genera);
    CHECK(x.central.counts == y.central.counts);
    CHECK(x.diagnostics == y.diagnostics);
  }
}

TEST_CASE("trisection euler identity") {
  const Subdivision s = barycentric(double_simplex(4));
  SchemeAux aux;
  aux.carriers = s.carriers;
  const PachnerResult p = pachner_2n_pass(s.triangulation, scheme_partition(s.triangulation, Scheme::EvenBary, aux));
  MultisectionReport r = multisection_report(p.triangulation, p.partition);
  REQUIRE(r.supports_multisection);
  const TrisectionCheck ok = euler_trisection_check(r);
  CHECK(ok.holds);
  CHECK(ok.lhs == ok.rhs);

  // A central surface of one genus less breaks the identity.
  REQUIRE(r.surface_genus);
  r.surface_genus = *r.surface_genus - 1;
  CHECK_FALSE(euler_trisection_check(r).holds);

  const MultisectionReport odd = multisection_report(pairs_ambient(double_simplex(5), {{0, 1}, {2, 3}, {4, 5}}));
  CHECK_THROWS_AS(euler_trisection_check(odd), PreconditionError);
}

TEST_CASE("words") {
  Word w{1, 2, -2, -1, 3, 1, -1};
  free_reduce(w);
  CHECK(w == Word{3});
  CHECK(inverse_word(Word{1, -2, 3}) == Word{-3, 2, -1});
  GroupPresentation g{2, {{1, 2, -1, -2}}, "test"};
  CHECK(abelianized_rank_gf2(g) == 2);
  GroupPresentation z2{1, {{1, 1}}, "test"};
  CHECK(abelianized_rank_gf2(z2) == 1);
  GroupPresentation trivial{1, {{1}}, "test"};
  CHECK(abelianized_rank_gf2(trivial) == 0);
}

TEST_CASE("fundamental group presentations") {
  SUBCASE("central circle of a 2-sphere") {
    const auto a = pairs_ambient(double_simplex(2), {{0, 1}, {2}});
    const CellComplex c = extract(a, 0b11);
    CHECK(c.dimension() == 1);
    const GroupPresentation g = pi1_presentation(c);
    CHECK(g.generators == 1);
    CHECK(g.relators.empty());
  }
  SUBCASE("abelianized rank equals the first Betti number") {
    const std::vector<std::shared_ptr<const Ambient>> cases{bary_s3(), pairs_ambient(cross_projective(3), {{0, 1}, {2, 3}}),
                                                            pairs_ambient(cross_projective(5), {{0, 1}, {2, 3}, {4, 5}})};
    for (const auto& a : cases) {
      const CellComplex c = extract(a, (1U << (a->partition.k + 1)) - 1);
      CHECK(abelianized_rank_gf2(pi1_presentation(c)) == cell_summary(c).betti[1]);
    }
    CHECK(abelianized_rank_gf2(pi1_presentation(extract(bary_s3(), 0b11))) == 6);
    CHECK(abelianized_rank_gf2(pi1_presentation(extract(pairs_ambient(cross_projective(3), {{0, 1}, {2, 3}}), 0b11))) == 2);
  }
  SUBCASE("disconnected input is rejected") {
    const Subdivision first = barycentric(double_simplex(2));
    const Subdivision second = barycentric(first.triangulation);
    SchemeAux aux;
    aux.carriers = second.carriers;
    aux.coloring = dual_graph(first.triangulation).coloring;
    const auto a = make_ambient(second.triangulation, scheme_partition(second.triangulation, Scheme::EvenNpc, aux));
    CHECK_THROWS_AS(pi1_presentation(extract(a, 0b11)), PreconditionError);
  }
}

TEST_CASE("inclusion epimorphisms") {
  const auto rp3 = pairs_ambient(cross_projective(3), {{0, 1}, {2, 3}});
  const EpimorphismReport e = inclusion_epimorphism(rp3, 0);
  CHECK(e.target_rank == 1);
  CHECK(e.relators_die);
  CHECK(e.surviving_relators == 0);
  CHECK(e.abelian_surjective);
  CHECK(e.images.size() == e.source_generators);

  const EpimorphismReport ball = inclusion_epimorphism(pairs_ambient(double_simplex(5), {{0, 1}, {2, 3}, {4, 5}}), 0);
  CHECK(ball.target_rank == 0);
  CHECK(ball.relators_die);

  const EpimorphismReport s3 = inclusion_epimorphism(bary_s3(), 1);
  CHECK(s3.target_rank == 3);
  CHECK(s3.relators_die);
  CHECK(s3.abelian_surjective);
}

TEST_CASE("homology of the central submanifold maps onto the ambient") {
  CHECK(h1_onto_check(bary_s3()));
  CHECK(h1_onto_check(pairs_ambient(cross_projective(3), {{0, 1}, {2, 3}})));
  CHECK(h1_onto_check(pairs_ambient(cross_projective(5), {{0, 1}, {2, 3}, {4, 5}})));
  CHECK(h1_onto_check(pairs_ambient(cross_projective(5), {{0, 1}, {2, 3}, {4, 5}}), 2));
}
