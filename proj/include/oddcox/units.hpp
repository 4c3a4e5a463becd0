#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddcox/system.hpp"

namespace oddcox {

struct PrimePowerFactor {
  long prime = 0;
  int exponent = 0;
  long cyclic_order = 0;  // (p - 1) p^(k - 1)
};

/// U_m for odd m >= 3: a product of cyclic groups, one per prime power.
struct UnitGroupStructure {
  long modulus = 0;
  long order = 0;  // phi(m)
  std::vector<PrimePowerFactor> factors;
  long minus_one = 0;  // m - 1
};

UnitGroupStructure unit_group(long m);
long euler_phi(long m);
std::vector<std::pair<long, int>> factorize_integer(long m);
/// Units of Z/m in ascending order.
std::vector<long> units_mod(long m);

/// C = prod (U_{m_i})^{k_i}, as (m_i, k_i) with ascending m_i.
std::vector<std::pair<long, int>> c_structure(const StarForm& star);
long c_order(const StarForm& star);

/// Complement D of <inner(w_1)> = {-1 vector} inside C, as generating cvecs.
///
/// Built on the first leaf whose exponent has a prime p = 3 mod 4: there
/// the p-part of U_{t_i} is H_1 x {+-1} with H_1 of odd order, and D is H_1
/// times every other cyclic factor.
struct ComplementD {
  Gen leaf = 0;  ///< leaf carrying H_1
  long prime = 0;
  std::vector<std::vector<long>> generators;  ///< cvecs (k_2, ..., k_n)
  long order = 0;                             ///< |C| / 2
  std::vector<long> cyclic_orders;            ///< D as a product of cyclic groups
};

std::optional<ComplementD> split_inn_c(const StarForm& star);

enum class SplitStatus { Guaranteed, NotGuaranteed };

struct OutDescriptor {
  std::vector<std::pair<long, int>> c_shape;
  long out_order = 0;
  std::vector<int> graph_part;  ///< (k_1, ..., k_l): Aut(Gamma) = prod S_{k_i}
  bool inn_c_splits = false;
  bool aut_out_split_guaranteed = false;
  std::string structure;  ///< e.g. "(Z/2)^2 ⋊ S_3"
  std::string note;
};

OutDescriptor out_descriptor(const StarForm& star);

}  // namespace oddcox
