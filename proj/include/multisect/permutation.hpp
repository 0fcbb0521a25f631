#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace multisect {

using Corner = std::uint8_t;

/// A bijection of {0..n}, stored as its image sequence.
using Perm = std::vector<Corner>;

Perm identity_perm(int size);
Perm inverse(std::span<const Corner> p);

/// (a ∘ b)(x) = a(b(x)).
Perm compose(std::span<const Corner> a, std::span<const Corner> b);

/// +1 for even permutations, -1 for odd ones.
int sign(std::span<const Corner> p);

bool is_permutation(std::span<const Corner> p);
bool is_identity(std::span<const Corner> p);

/// Lexicographic rank in 0..size!-1.
std::uint64_t perm_rank(std::span<const Corner> p);
Perm perm_unrank(std::uint64_t rank, int size);

std::uint64_t factorial(int n);

/// Image of a corner subset (bit i set for corner i).
std::uint32_t apply_to_mask(std::span<const Corner> p, std::uint32_t mask);

}  // namespace multisect
