#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "multisect/subdivide.hpp"
#include "multisect/triangulation.hpp"
#include "multisect/vertex_partition.hpp"

namespace multisect {

inline constexpr const char* kFormatVersion = "1.0.0";

/// A triangulation plus the optional data that travels with it between
/// pipeline stages.
struct Document {
  Triangulation triangulation;
  std::optional<CarrierLabels> carriers;
  /// Two-coloring of the facets of the previous subdivision level.
  std::optional<std::vector<int>> coloring;
  std::optional<VertexPartition> partition;
};

/// Parses a document. Throws InputError with the offending line number.
Document read_document(std::istream& in);
Document read_document_file(const std::string& path);

/// Reads `k` / `scheme` / `v` lines against an existing triangulation.
VertexPartition read_partition(std::istream& in, const Triangulation& t);

/// Vertex format when vertex ids are present, gluing format otherwise.
void write_document(std::ostream& out, const Document& doc);
void write_partition(std::ostream& out, const Triangulation& t, const VertexPartition& p);

}  // namespace multisect
