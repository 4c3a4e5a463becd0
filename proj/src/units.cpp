#include "oddcox/units.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oddcox/error.hpp"

namespace oddcox {

namespace {

long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Subgroup of U_m generated by `gens` (abelian, so span * <u> per step).
std::set<long> span(long m, const std::vector<long>& gens) {
  std::set<long> out{1 % m};
  for (long u : gens) {
    std::set<long> grown = out;
    for (long s : out) {
      for (long p = (s * u) % m; grown.insert(p).second; p = (p * u) % m) {
      }
    }
    out = std::move(grown);
  }
  return out;
}

// Greedy generating set of the subgroup {u in U_m : member(u)}.
template <typename Pred>
std::vector<long> generators_of(long m, Pred member, std::size_t& subgroup_order) {
  std::vector<long> gens;
  std::set<long> current{1};
  subgroup_order = 0;
  for (long u : units_mod(m)) {
    if (!member(u)) continue;
    ++subgroup_order;
    if (current.count(u)) continue;
    gens.push_back(u);
    current = span(m, gens);
  }
  return gens;
}

std::string render_cyclic(std::vector<long> orders) {
  std::sort(orders.begin(), orders.end());
  std::string out;
  for (std::size_t i = 0; i < orders.size();) {
    std::size_t j = i;
    while (j < orders.size() && orders[j] == orders[i]) ++j;
    if (!out.empty()) out += " × ";
    const std::string base = "Z/" + std::to_string(orders[i]);
    out += (j - i == 1) ? base : "(" + base + ")^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

long factorial(int k) {
  long r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

long prime_3_mod_4(long m) {
  for (const auto& [p, e] : factorize_integer(m)) {
    if (p % 4 == 3) return p;
  }
  return 0;
}

}  // namespace

std::vector<std::pair<long, int>> factorize_integer(long m) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

long euler_phi(long m) {
  long r = 1;
  for (const auto& [p, e] : factorize_integer(m)) r *= (p - 1) * ipow(p, e - 1);
  return r;
}

std::vector<long> units_mod(long m) {
  std::vector<long> out;
  for (long u = 1; u < m; ++u) {
    if (std::gcd(u, m) == 1) out.push_back(u);
  }
  return out;
}

UnitGroupStructure unit_group(long m) {
  if (m < 3 || m % 2 == 0) fail(ErrorKind::EvenModulus, "modulus must be odd and >= 3, got " + std::to_string(m));
  UnitGroupStructure u;
  u.modulus = m;
  u.order = euler_phi(m);
  u.minus_one = m - 1;
  for (const auto& [p, e] : factorize_integer(m)) u.factors.push_back({p, e, (p - 1) * ipow(p, e - 1)});
  return u;
}

std::vector<std::pair<long, int>> c_structure(const StarForm& star) {
  std::vector<std::pair<long, int>> out;
  for (int b = 0; b < star.block_count(); ++b) out.emplace_back(star.block_exponent(b), star.block_size(b));
  return out;
}

long c_order(const StarForm& star) {
  long order = 1;
  for (long t : star.t_vector()) order *= euler_phi(t);
  return order;
}

std::optional<ComplementD> split_inn_c(const StarForm& star) {
  const int n = star.rank();
  Gen chosen = 0;
  long prime = 0;
  for (Gen i = 2; i <= n && !chosen; ++i) {
    if (const long p = prime_3_mod_4(star.t(i))) {
      chosen = i;
      prime = p;
    }
  }
  if (!chosen) return std::nullopt;

  ComplementD d;
  d.leaf = chosen;
  d.prime = prime;
  d.order = 1;
  for (Gen i = 2; i <= n; ++i) {
    const long t = star.t(i);
    std::size_t subgroup_order = 0;
    std::vector<long> gens;
    if (i == chosen) {
      long pk = 1;
      for (const auto& [p, e] : factorize_integer(t)) {
        if (p == prime) pk = ipow(p, e);
      }
      // H_1: the squares of U_{p^a}, the unique subgroup of index 2; it has
      // odd order because p = 3 mod 4.
      std::set<long> squares;
      for (long u : units_mod(pk)) squares.insert((u * u) % pk);
      gens = generators_of(t, [&](long u) { return squares.count(u % pk) > 0; }, subgroup_order);
      if (squares.count((t - 1) % pk)) fail(ErrorKind::Internal, "-1 lies in H_1");
      for (const auto& [p, e] : factorize_integer(t)) {
        const long order = (p - 1) * ipow(p, e - 1);
        d.cyclic_orders.push_back(p == prime ? order / 2 : order);
      }
    } else {
      gens = generators_of(t, [](long) { return true; }, subgroup_order);
      for (const auto& [p, e] : factorize_integer(t)) d.cyclic_orders.push_back((p - 1) * ipow(p, e - 1));
    }
    if (span(t, gens).size() != subgroup_order) fail(ErrorKind::Internal, "generator closure mismatch");
    d.order *= static_cast<long>(subgroup_order);
    for (long g : gens) {
      std::vector<long> cvec(static_cast<std::size_t>(n - 1), 1);
      cvec[static_cast<std::size_t>(i - 2)] = g;
      d.generators.push_back(std::move(cvec));
    }
  }
  std::erase(d.cyclic_orders, 1);
  if (2 * d.order != c_order(star)) fail(ErrorKind::Internal, "complement has the wrong order");
  return d;
}

OutDescriptor out_descriptor(const StarForm& star) {
  if (star.rank() < 2) fail(ErrorKind::NotInTW, "out descriptor needs rank >= 2");
  OutDescriptor out;
  out.c_shape = c_structure(star);
  long graph_order = 1;
  std::string graph;
  for (const auto& [m, k] : out.c_shape) {
    out.graph_part.push_back(k);
    graph_order *= factorial(k);
    if (k >= 2) graph += (graph.empty() ? "" : " × ") + std::string("S_") + std::to_string(k);
  }
  out.out_order = c_order(star) / 2 * graph_order;

  const auto d = split_inn_c(star);
  out.inn_c_splits = d.has_value();
  for (const auto& [m, k] : out.c_shape) {
    if (k == 1 && prime_3_mod_4(m)) out.aut_out_split_guaranteed = true;
  }

  std::string quotient;
  if (d) {
    quotient = d->cyclic_orders.empty() ? "" : render_cyclic(d->cyclic_orders);
  } else {
    quotient = "C/{±1} (order " + std::to_string(c_order(star) / 2) + ")";
  }
  if (quotient.empty() && graph.empty()) {
    out.structure = "1";
  } else if (graph.empty()) {
    out.structure = quotient;
  } else if (quotient.empty()) {
    out.structure = graph;
  } else {
    out.structure = quotient + " ⋊ " + (graph.find(" × ") != std::string::npos ? "(" + graph + ")" : graph);
  }

  const bool all_three = out.c_shape.size() == 1 && out.c_shape[0].first == 3;
  if (out.aut_out_split_guaranteed) {
    out.note = "Aut -> Out splits: an exponent of multiplicity one has a prime factor = 3 mod 4";
  } else if (all_three) {
    out.note = "all exponents 3 (L_n family): Aut(L_n) = (L_n ⋊ (Z/2)^(k-1)) ⋊ S_k is asserted for this family; "
               "not covered by the multiplicity-one criterion";
  } else {
    out.note = "Aut -> Out splitting not guaranteed by the multiplicity-one criterion (unknown)";
  }
  return out;
}

}  // namespace oddcox
