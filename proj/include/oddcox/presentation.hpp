#pragma once

#include <string>
#include <vector>

namespace oddcox {

/// Word in the free group on generators 1..count: +g is a generator, -g its
/// inverse.
using FreeWord = std::vector<int>;

/// Group presentation <x_1, ..., x_count | relators>.
struct FinitePresentation {
  int generators = 0;
  std::vector<std::string> names;  ///< optional display names, one per generator
  std::vector<FreeWord> relators;
};

FreeWord free_reduce(const FreeWord& w);
/// Free reduction followed by cancelling inverse letters across the ends.
FreeWord cyclic_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);

/// Least rotation of the cyclically reduced word or of its inverse; two
/// relators with equal keys define the same normal closure.
FreeWord relator_key(const FreeWord& w);

/// True when the relator is, up to cyclic rotation, a proper power u^k, k>1.
bool is_proper_power(const FreeWord& w);

/// Tietze moves: reduce relators cyclically, drop trivial and duplicate ones,
/// and eliminate a generator occurring exactly once in some relator by
/// substituting its solution everywhere. Repeats until nothing applies,
/// always using the shortest eligible relator first. Remaining generators are
/// renumbered in their original order.
FinitePresentation tietze_simplify(FinitePresentation p);

std::string to_string(const FreeWord& w, const FinitePresentation& p);

}  // namespace oddcox
