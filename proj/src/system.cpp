#include "oddcox/system.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "oddcox/error.hpp"

namespace oddcox {

long Exponent::value() const {
  if (!value_) fail(ErrorKind::Parse, "infinite exponent has no numeric value");
  return *value_;
}

Exponent CoxeterSystem::m(Gen i, Gen j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_) {
    fail(ErrorKind::InvalidLetter, "generator index out of range: (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ")");
  }
  return entries_[static_cast<std::size_t>((i - 1) * rank_ + (j - 1))];
}

std::vector<Edge> CoxeterSystem::edges() const {
  std::vector<Edge> out;
  for (Gen u = 1; u <= rank_; ++u) {
    for (Gen v = u + 1; v <= rank_; ++v) {
      const Exponent e = m(u, v);
      if (e.finite()) out.push_back({u, v, e.value()});
    }
  }
  return out;
}

std::vector<Gen> CoxeterSystem::neighbours(Gen i) const {
  std::vector<Gen> out;
  for (Gen j = 1; j <= rank_; ++j) {
    if (adjacent(i, j)) out.push_back(j);
  }
  return out;
}

CoxeterSystem validate_system(const RawMatrix& raw) {
  const auto n = static_cast<int>(raw.size());
  if (n < 1) fail(ErrorKind::Parse, "rank must be at least 1");
  for (const auto& row : raw) {
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::Parse, "matrix is not square");
  }

  std::vector<Exponent> entries;
  entries.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Exponent& e = raw[i][j];
      const std::string at = "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
      if (!(e == raw[j][i])) fail(ErrorKind::NotSymmetric, "entry " + at + " differs from its transpose");
      if (i == j) {
        if (!e.finite() || e.value() != 1) fail(ErrorKind::DiagonalNotOne, "diagonal entry " + at + " is not 1");
      } else if (e.finite() && (e.value() < 3 || e.value() % 2 == 0)) {
        fail(ErrorKind::EvenOrSmallExponent,
             "off-diagonal entry " + at + " = " + std::to_string(e.value()) + " is not odd >= 3");
      }
      entries.push_back(e);
    }
  }
  return CoxeterSystem(n, std::move(entries));
}

CoxeterSystem system_from_edges(int rank, const std::vector<Edge>& edges) {
  if (rank < 1) fail(ErrorKind::Parse, "rank must be at least 1");
  RawMatrix raw(static_cast<std::size_t>(rank), std::vector<Exponent>(static_cast<std::size_t>(rank)));
  for (int i = 0; i < rank; ++i) raw[i][i] = Exponent(1);
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(rank), std::vector<bool>(static_cast<std::size_t>(rank)));
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > rank || e.v < 1 || e.v > rank) {
      fail(ErrorKind::Parse, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) fail(ErrorKind::Parse, "self-loop at vertex " + std::to_string(e.u));
    if (seen[e.u - 1][e.v - 1]) {
      fail(ErrorKind::Parse, "duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    seen[e.u - 1][e.v - 1] = seen[e.v - 1][e.u - 1] = true;
    raw[e.u - 1][e.v - 1] = raw[e.v - 1][e.u - 1] = Exponent(e.m);
  }
  return validate_system(raw);
}

RawMatrix to_raw(const CoxeterSystem& sys) {
  const int n = sys.rank();
  RawMatrix raw(static_cast<std::size_t>(n), std::vector<Exponent>(static_cast<std::size_t>(n)));
  for (Gen i = 1; i <= n; ++i) {
    for (Gen j = 1; j <= n; ++j) raw[i - 1][j - 1] = sys.m(i, j);
  }
  return raw;
}

CoxeterSystem star_system(const std::vector<long>& t) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < t.size(); ++k) edges.push_back({1, static_cast<Gen>(k + 2), t[k]});
  return system_from_edges(static_cast<int>(t.size()) + 1, edges);
}

CoxeterSystem path_system(const std::vector<long>& labels) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    edges.push_back({static_cast<Gen>(k + 1), static_cast<Gen>(k + 2), labels[k]});
  }
  return system_from_edges(static_cast<int>(labels.size()) + 1, edges);
}

DiagramV diagram_v(const CoxeterSystem& sys) { return {sys.rank(), sys.edges()}; }

DiagramGamma diagram_gamma(const CoxeterSystem& sys) {
  DiagramGamma g;
  g.vertices = sys.rank();
  for (Gen u = 1; u <= sys.rank(); ++u) {
    for (Gen v = u + 1; v <= sys.rank(); ++v) {
      const Exponent e = sys.m(u, v);
      // Validated off-diagonal entries are all >= 3.
      g.edges.push_back({u, v, e, !e.finite() || e.value() >= 4});
    }
  }
  return g;
}

bool is_odd_matrix(const RawMatrix& raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = 0; j < raw[i].size(); ++j) {
      if (i != j && raw[i][j].finite() && raw[i][j].value() % 2 == 0) return false;
    }
  }
  return true;
}

Classification classify(const CoxeterSystem& sys) {
  const int n = sys.rank();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  const auto edges = sys.edges();
  for (const Edge& e : edges) {
    const int a = find(e.u - 1);
    const int b = find(e.v - 1);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  Classification c;
  c.odd = is_odd_matrix(to_raw(sys));
  c.connected = components == 1;
  c.tree = c.connected && static_cast<int>(edges.size()) == n - 1;
  c.in_tw = c.odd && c.connected && c.tree && n >= 2;
  return c;
}

SystemInvariant invariants(const CoxeterSystem& sys) {
  if (!classify(sys).in_tw) fail(ErrorKind::NotInTW, "system is not an odd tree system of rank >= 2");
  SystemInvariant inv;
  inv.rank = sys.rank();
  for (const Edge& e : sys.edges()) inv.finite_exponents.push_back(e.m);
  std::sort(inv.finite_exponents.begin(), inv.finite_exponents.end());
  return inv;
}

bool decide_isomorphic(const CoxeterSystem& a, const CoxeterSystem& b) {
  return invariants(a) == invariants(b);
}

long StarForm::t(Gen leaf) const {
  if (leaf < 2 || leaf > rank_) fail(ErrorKind::NotAdjacentPair, "not a leaf: " + std::to_string(leaf));
  return t_[static_cast<std::size_t>(leaf - 2)];
}

std::pair<Gen, Gen> StarForm::block_range(int block) const {
  Gen first = 2;
  for (int b = 0; b < block; ++b) first += multiplicity_[b];
  return {first, first + multiplicity_[block] - 1};
}

int StarForm::block_of(Gen leaf) const {
  const long exponent = t(leaf);
  const auto it = std::find(distinct_.begin(), distinct_.end(), exponent);
  return static_cast<int>(it - distinct_.begin());
}

StarForm star_form_of(const CoxeterSystem& sys) {
  const int n = sys.rank();
  StarForm form;
  form.rank_ = n;
  for (Gen i = 2; i <= n; ++i) {
    for (Gen j = i + 1; j <= n; ++j) {
      if (sys.adjacent(i, j)) fail(ErrorKind::NotStarForm, "leaves " + std::to_string(i) + " and " +
                                                               std::to_string(j) + " are joined");
    }
    const Exponent e = sys.m(1, i);
    if (!e.finite()) fail(ErrorKind::NotStarForm, "vertex " + std::to_string(i) + " is not joined to 1");
    if (!form.t_.empty() && e.value() < form.t_.back()) {
      fail(ErrorKind::NotStarForm, "leaf exponents are not ascending");
    }
    form.t_.push_back(e.value());
  }
  for (long t : form.t_) {
    if (form.distinct_.empty() || form.distinct_.back() != t) {
      form.distinct_.push_back(t);
      form.multiplicity_.push_back(0);
    }
    ++form.multiplicity_.back();
  }
  return form;
}

StarGroup as_star(const CoxeterSystem& sys) { return {sys, star_form_of(sys)}; }

StarGroup canonical_star(const SystemInvariant& inv) {
  if (inv.rank < 2 || static_cast<int>(inv.finite_exponents.size()) != inv.rank - 1) {
    fail(ErrorKind::MalformedInvariant, "exponent multiset must have rank - 1 members, rank >= 2");
  }
  std::vector<long> t = inv.finite_exponents;
  std::sort(t.begin(), t.end());
  for (long m : t) {
    if (m < 3 || m % 2 == 0) fail(ErrorKind::MalformedInvariant, "exponent " + std::to_string(m) + " is not odd >= 3");
  }
  return as_star(star_system(t));
}

MergeResult merge_generators(const StarGroup& star, Gen i, Gen j) {
  const int n = star.system.rank();
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    fail(ErrorKind::NotAdjacentPair, "cannot merge " + std::to_string(i) + " and " + std::to_string(j));
  }
  if (i > j) std::swap(i, j);

  // label[g] for surviving leaves; 0 marks "collapsed into the center".
  std::vector<long> label(static_cast<std::size_t>(n + 1), 0);
  for (Gen g = 2; g <= n; ++g) label[g] = star.form.t(g);
  std::vector<Gen> merged_into(static_cast<std::size_t>(n + 1));
  std::iota(merged_into.begin(), merged_into.end(), 0);

  if (i == 1) {
    label[j] = 0;
    merged_into[j] = 1;
  } else {
    const long d = std::gcd(label[i], label[j]);
    merged_into[j] = i;
    label[j] = 0;
    if (d == 1) {
      // (w_1 u)^1 = 1 forces u = w_1.
      label[i] = 0;
      merged_into[i] = 1;
    } else {
      label[i] = d;
    }
  }

  std::vector<long> t;
  std::vector<Gen> new_index(static_cast<std::size_t>(n + 1), 0);
  new_index[1] = 1;
  for (Gen g = 2; g <= n; ++g) {
    if (merged_into[g] == g) {
      t.push_back(label[g]);
      new_index[g] = static_cast<Gen>(t.size()) + 1;
    }
  }
  MergeResult out{star_system(t), {}};
  for (Gen g = 1; g <= n; ++g) {
    Gen target = g;
    while (merged_into[target] != target) target = merged_into[target];
    out.mapping.push_back(new_index[target]);
  }
  return out;
}

}  // namespace oddcox
