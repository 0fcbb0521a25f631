#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multisect/cells.hpp"
#include "multisect/partition.hpp"

namespace multisect {

struct MultisectionReport {
  int n = 0;
  int k = 0;
  std::int64_t euler = 0;
  /// Handlebody genus per class; unset where the class spine is not a
  /// connected graph. Empty in generalized mode.
  std::vector<std::optional<std::int64_t>> genera;
  std::vector<SubsetReport> subsets;
  CellSummary central;
  /// Unset when the central complex is not a cube complex.
  std::optional<bool> npc;
  std::string npc_reason;
  /// Set when the central complex is a closed surface: genus if orientable,
  /// crosscap number otherwise.
  std::optional<std::int64_t> surface_genus;
  bool surface_orientable = false;
  /// χ(M) equals the alternating sum of χ over all subset complexes.
  bool inclusion_exclusion_ok = false;
  /// χ(M) = 2 + g(Σ) - Σ g_i, only evaluated for supported trisections.
  std::optional<bool> trisection_identity;
  bool supports_multisection = false;
  bool supports_generalized = false;
  bool generalized_mode = false;
  std::vector<std::string> diagnostics;
};

MultisectionReport multisection_report(std::shared_ptr<const Ambient> ambient, bool generalized = false);
MultisectionReport multisection_report(const Triangulation& t, const VertexPartition& p, bool generalized = false);

struct TrisectionCheck {
  bool holds = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  /// (g, k) when the three handlebody genera agree.
  std::optional<std::pair<std::int64_t, std::int64_t>> gk;
};

/// Checks 2χ(M) = 4 + (2 - χ(Σ)) - 2 Σ g_i. Throws PreconditionError unless
/// n = 4 and the report supports a multisection.
TrisectionCheck euler_trisection_check(const MultisectionReport& r);

/// Words are sequences of signed 1-based generator indices.
using Word = std::vector<int>;

void free_reduce(Word& w);
Word inverse_word(const Word& w);

struct GroupPresentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
  std::string provenance;
};

/// GF(2) rank of the abelianization.
std::size_t abelianized_rank_gf2(const GroupPresentation& g);

/// Edge-path presentation of π₁ from the 2-skeleton: breadth-first spanning
/// tree from vertex 0, generators are the non-tree edges in index order,
/// every edge oriented from the endpoint keeping the smaller vertex class.
/// Throws PreconditionError for disconnected or non-cube input.
GroupPresentation pi1_presentation(const CellComplex& c);

struct EpimorphismReport {
  std::size_t source_generators = 0;
  /// Rank of the free group π₁(Γ_i).
  std::size_t target_rank = 0;
  std::vector<Word> images;
  bool relators_die = false;
  std::size_t surviving_relators = 0;
  bool abelian_surjective = false;
};

/// The map π₁(Σ) → π₁(Γ_i) induced by collapsing every central cell onto
/// its class-i face.
EpimorphismReport inclusion_epimorphism(std::shared_ptr<const Ambient> ambient, int cls);

/// Whether H₁(Σ; GF(2)) → H₁(M; GF(2)) is onto, pushing central cells to
/// their class-cls faces.
bool h1_onto_check(std::shared_ptr<const Ambient> ambient, int cls = 0);

}  // namespace multisect
