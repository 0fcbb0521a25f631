#include "multisect/face_poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "multisect/error.hpp"
#include "multisect/union_find.hpp"

namespace multisect {

bool key_less(FaceKey a, FaceKey b) {
  if (a.facet != b.facet) return a.facet < b.facet;
  std::uint32_t x = a.mask;
  std::uint32_t y = b.mask;
  while (x != 0 && y != 0) {
    const int cx = std::countr_zero(x);
    const int cy = std::countr_zero(y);
    if (cx != cy) return cx < cy;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

std::string format_key(FaceKey key) {
  std::string out = std::to_string(key.facet) + ":";
  bool first = true;
  for (std::uint32_t m = key.mask; m != 0; m &= m - 1) {
    if (!first) out += ',';
    out += std::to_string(std::countr_zero(m));
    first = false;
  }
  return out;
}

FaceKey parse_key(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) {
    throw InputError("malformed face key '" + text + "'");
  }
  FaceKey key;
  try {
    std::size_t used = 0;
    const unsigned long f = std::stoul(text.substr(0, colon), &used);
    if (used != colon) throw InputError("malformed face key '" + text + "'");
    key.facet = static_cast<FacetId>(f);
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const unsigned long c = std::stoul(item, &used);
      if (used != item.size() || c > 31) throw InputError("malformed face key '" + text + "'");
      key.mask |= 1U << c;
    }
  } catch (const std::logic_error&) {
    throw InputError("malformed face key '" + text + "'");
  }
  if (key.mask == 0) throw InputError("malformed face key '" + text + "'");
  return key;
}

VertexClasses::VertexClasses(const Triangulation& t) : corners_(t.corners()) {
  const std::size_t m = t.size();
  const auto c = static_cast<std::size_t>(corners_);
  UnionFind uf(m * c);
  for (std::size_t f = 0; f < m; ++f) {
    for (int i = 0; i < corners_; ++i) {
      const FacetId g = t.target(static_cast<FacetId>(f), i);
      const auto p = t.gluing(static_cast<FacetId>(f), i);
      for (int j = 0; j < corners_; ++j) {
        if (j == i) continue;
        uf.unite(static_cast<std::uint32_t>(f * c + static_cast<std::size_t>(j)),
                 static_cast<std::uint32_t>(g * c + p[static_cast<std::size_t>(j)]));
      }
    }
  }
  // Scanning (facet, corner) in order meets each class first at its
  // canonical incarnation, so first-seen order is canonical order.
  std::vector<std::uint32_t> index_of_root(m * c, ~0U);
  table_.resize(m * c);
  for (std::size_t e = 0; e < m * c; ++e) {
    const std::uint32_t r = uf.find(static_cast<std::uint32_t>(e));
    if (index_of_root[r] == ~0U) {
      index_of_root[r] = static_cast<std::uint32_t>(keys_.size());
      keys_.push_back({static_cast<FacetId>(e / c), 1U << (e % c)});
    }
    table_[e] = index_of_root[r];
  }
}

FacePoset::FacePoset(const Triangulation& t)
    : dim_(t.dimension()), corners_(t.corners()), facets_(t.size()) {
  if (corners_ > 24 || (facets_ << corners_) > (std::size_t{1} << 31)) {
    throw ResourceError("face poset too large: facets * 2^(n+1) exceeds indexing range");
  }
  const std::size_t span = std::size_t{1} << corners_;
  const std::uint32_t full = static_cast<std::uint32_t>(span - 1);
  const std::size_t total = facets_ * span;
  UnionFind uf(total);
  for (std::size_t f = 0; f < facets_; ++f) {
    for (int i = 0; i < corners_; ++i) {
      const FacetId g = t.target(static_cast<FacetId>(f), i);
      const auto p = t.gluing(static_cast<FacetId>(f), i);
      if (g * static_cast<std::size_t>(corners_) + p[static_cast<std::size_t>(i)] <
          f * static_cast<std::size_t>(corners_) + static_cast<std::size_t>(i)) {
        continue;  // the partner slot handles this pair
      }
      const std::uint32_t ridge = full ^ (1U << i);
      for (std::uint32_t s = ridge; s != 0; s = (s - 1) & ridge) {
        uf.unite(static_cast<std::uint32_t>(f * span + s),
                 static_cast<std::uint32_t>(g * span + apply_to_mask(p, s)));
      }
    }
  }

  std::vector<FaceKey> best(total);
  std::vector<char> seen(total, 0);
  for (std::size_t e = 0; e < total; ++e) {
    if ((e & (span - 1)) == 0) continue;
    const std::uint32_t r = uf.find(static_cast<std::uint32_t>(e));
    const FaceKey k{static_cast<FacetId>(e / span), static_cast<std::uint32_t>(e & (span - 1))};
    if (!seen[r] || key_less(k, best[r])) {
      best[r] = k;
      seen[r] = 1;
    }
  }

  keys_.assign(static_cast<std::size_t>(corners_), {});
  std::vector<std::uint32_t> roots;
  for (std::size_t e = 0; e < total; ++e) {
    if (seen[e]) roots.push_back(static_cast<std::uint32_t>(e));
  }
  std::vector<std::vector<std::uint32_t>> roots_by_dim(static_cast<std::size_t>(corners_));
  for (std::uint32_t r : roots) {
    roots_by_dim[static_cast<std::size_t>(std::popcount(best[r].mask) - 1)].push_back(r);
  }
  std::vector<std::uint32_t> index_of_root(total, ~0U);
  for (std::size_t d = 0; d < roots_by_dim.size(); ++d) {
    auto& rs = roots_by_dim[d];
    std::sort(rs.begin(), rs.end(), [&](std::uint32_t a, std::uint32_t b) { return key_less(best[a], best[b]); });
    keys_[d].reserve(rs.size());
    for (std::uint32_t r : rs) {
      index_of_root[r] = static_cast<std::uint32_t>(keys_[d].size());
      keys_[d].push_back(best[r]);
    }
  }

  class_of_.assign(total, ~0U);
  inc_offsets_.assign(static_cast<std::size_t>(corners_), {});
  incarnations_.assign(static_cast<std::size_t>(corners_), {});
  for (std::size_t d = 0; d < keys_.size(); ++d) inc_offsets_[d].assign(keys_[d].size() + 1, 0);
  for (std::size_t e = 0; e < total; ++e) {
    if ((e & (span - 1)) == 0) continue;
    const std::uint32_t cls = index_of_root[uf.find(static_cast<std::uint32_t>(e))];
    class_of_[e] = cls;
    const auto d = static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(e & (span - 1))) - 1);
    ++inc_offsets_[d][cls + 1];
  }
  for (std::size_t d = 0; d < keys_.size(); ++d) {
    auto& off = inc_offsets_[d];
    for (std::size_t i = 1; i < off.size(); ++i) off[i] += off[i - 1];
    incarnations_[d].resize(off.back());
  }
  {
    std::vector<std::vector<std::uint32_t>> fill(keys_.size());
    for (std::size_t d = 0; d < keys_.size(); ++d) fill[d] = inc_offsets_[d];
    for (std::size_t e = 0; e < total; ++e) {
      const auto mask = static_cast<std::uint32_t>(e & (span - 1));
      if (mask == 0) continue;
      const auto d = static_cast<std::size_t>(std::popcount(mask) - 1);
      incarnations_[d][fill[d][class_of_[e]]++] = {static_cast<FacetId>(e / span), mask};
    }
  }

  up_offsets_.assign(static_cast<std::size_t>(corners_), {});
  up_.assign(static_cast<std::size_t>(corners_), {});
  for (int d = 0; d + 1 < corners_; ++d) {
    const auto ud = static_cast<std::size_t>(d);
    auto& off = up_offsets_[ud];
    auto& up = up_[ud];
    off.assign(keys_[ud].size() + 1, 0);
    std::vector<std::uint32_t> scratch;
    for (std::uint32_t cls = 0; cls < keys_[ud].size(); ++cls) {
      scratch.clear();
      for (const FaceKey& inc : incarnations(d, cls)) {
        for (std::uint32_t rest = full & ~inc.mask; rest != 0; rest &= rest - 1) {
          scratch.push_back(class_of(inc.facet, inc.mask | (rest & (~rest + 1))));
        }
      }
      std::sort(scratch.begin(), scratch.end());
      scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
      up.insert(up.end(), scratch.begin(), scratch.end());
      off[cls + 1] = static_cast<std::uint32_t>(up.size());
    }
  }
  up_offsets_[static_cast<std::size_t>(dim_)].assign(keys_[static_cast<std::size_t>(dim_)].size() + 1, 0);
}

std::vector<std::size_t> FacePoset::counts() const {
  std::vector<std::size_t> out;
  out.reserve(keys_.size());
  for (const auto& k : keys_) out.push_back(k.size());
  return out;
}

std::span<const FaceKey> FacePoset::incarnations(int d, std::uint32_t cls) const noexcept {
  const auto ud = static_cast<std::size_t>(d);
  const auto& off = inc_offsets_[ud];
  return {incarnations_[ud].data() + off[cls], off[cls + 1] - off[cls]};
}

std::vector<std::uint32_t> FacePoset::faces(int d, std::uint32_t cls) const {
  std::vector<std::uint32_t> out;
  if (d == 0) return out;
  const FaceKey k = key(d, cls);
  for (std::uint32_t m = k.mask; m != 0; m &= m - 1) {
    out.push_back(class_of(k.facet, k.mask & ~(m & (~m + 1))));
  }
  return out;
}

std::span<const std::uint32_t> FacePoset::cofaces(int d, std::uint32_t cls) const noexcept {
  const auto ud = static_cast<std::size_t>(d);
  const auto& off = up_offsets_[ud];
  if (off.empty()) return {};
  return {up_[ud].data() + off[cls], off[cls + 1] - off[cls]};
}

std::vector<std::uint32_t> FacePoset::vertices(int d, std::uint32_t cls) const {
  std::vector<std::uint32_t> out;
  const FaceKey k = key(d, cls);
  for (std::uint32_t m = k.mask; m != 0; m &= m - 1) out.push_back(vertex_of(k.facet, std::countr_zero(m)));
  return out;
}

bool is_simplicial(const FacePoset& poset) {
  for (int d = 1; d <= poset.dimension(); ++d) {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint32_t cls = 0; cls < poset.count(d); ++cls) {
      auto vs = poset.vertices(d, cls);
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
      if (!seen.insert(std::move(vs)).second) return false;
    }
  }
  return true;
}

}  // namespace multisect
