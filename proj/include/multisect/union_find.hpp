#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace multisect {

/// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_offset_;
    return true;
  }

  std::size_t size() const { return parent_.size(); }

  /// Number of disjoint sets.
  std::size_t components() const {
    return parent_.size() + static_cast<std::size_t>(components_offset_);
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::ptrdiff_t components_offset_ = 0;
};

}  // namespace multisect
