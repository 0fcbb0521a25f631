#include "multisect/permutation.hpp"

#include <algorithm>
#include <bit>

namespace multisect {

Perm identity_perm(int size) {
  Perm p(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) p[i] = static_cast<Corner>(i);
  return p;
}

Perm inverse(std::span<const Corner> p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Corner>(i);
  return inv;
}

Perm compose(std::span<const Corner> a, std::span<const Corner> b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

int sign(std::span<const Corner> p) {
  std::vector<bool> seen(p.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    parity ^= static_cast<int>((len + 1) & 1U);
  }
  return parity ? -1 : 1;
}

bool is_permutation(std::span<const Corner> p) {
  std::vector<bool> seen(p.size(), false);
  for (Corner c : p) {
    if (c >= p.size() || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

bool is_identity(std::span<const Corner> p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t perm_rank(std::span<const Corner> p) {
  const int n = static_cast<int>(p.size());
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t below = used & ((1U << p[i]) - 1U);
    const auto smaller_unused = static_cast<std::uint64_t>(p[i] - std::popcount(below));
    rank += smaller_unused * factorial(n - 1 - i);
    used |= 1U << p[i];
  }
  return rank;
}

Perm perm_unrank(std::uint64_t rank, int size) {
  std::vector<Corner> pool = identity_perm(size);
  Perm p;
  p.reserve(static_cast<std::size_t>(size));
  for (int i = size - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    p.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return p;
}

std::uint32_t apply_to_mask(std::span<const Corner> p, std::uint32_t mask) {
  std::uint32_t out = 0;
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    out |= 1U << p[static_cast<std::size_t>(bit)];
    mask &= mask - 1;
  }
  return out;
}

}  // namespace multisect
