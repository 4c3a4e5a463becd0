#pragma once

#include <cstddef>
#include <vector>

#include "oddcox/permutation.hpp"

namespace oddcox {

inline constexpr std::size_t kDefaultGroupCap = 100'000;

/// Finite group by multiplication table: table[a][b] = a * b on 0..size-1.
struct CayleyTable {
  std::vector<std::vector<int>> table;

  std::size_t size() const { return table.size(); }
};

/// Number of orbits of g . x = g x phi(g)^-1 (twisted conjugacy classes).
///
/// `phi` gives the image of every element; it must be a bijective
/// homomorphism (NotBijectiveHom otherwise).
long twisted_count(const CayleyTable& group, const std::vector<int>& phi);

/// Same count for the group generated by `generators`, with the automorphism
/// given by generator images. Throws GroupTooLarge above `cap` elements.
long twisted_count(const std::vector<Permutation>& generators, const std::vector<Permutation>& images,
                   std::size_t cap = kDefaultGroupCap);

/// Z/m under addition, a small helper for tests and the CLI.
CayleyTable cyclic_table(int m);

}  // namespace oddcox
