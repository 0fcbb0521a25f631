#pragma once

#include <string>
#include <vector>

namespace multisect {

/// Labels every vertex class (canonical numbering) by a class in 0..k.
struct VertexPartition {
  int k = 0;
  std::vector<int> labels;
  /// Name of the scheme that produced the labels.
  std::string scheme = "explicit";

  /// Number of vertex classes carrying each label.
  std::vector<std::size_t> class_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k + 1), 0);
    for (int l : labels) ++sizes[static_cast<std::size_t>(l)];
    return sizes;
  }
};

}  // namespace multisect
