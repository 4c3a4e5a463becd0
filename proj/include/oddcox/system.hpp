#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oddcox {

/// Generator index, 1-based (w_1, ..., w_n).
using Gen = int;

/// Entry of a Coxeter matrix: a positive integer or infinity.
///
/// Infinity is a distinguished state, never a numeric sentinel; value() on an
/// infinite exponent throws. Raw (unvalidated) matrices may hold any integer.
class Exponent {
 public:
  constexpr Exponent() = default;  // infinity
  constexpr explicit Exponent(long value) : value_(value) {}

  static constexpr Exponent infinity() { return Exponent(); }

  constexpr bool finite() const { return value_.has_value(); }
  long value() const;

  friend constexpr bool operator==(const Exponent&, const Exponent&) = default;

 private:
  std::optional<long> value_;
};

using RawMatrix = std::vector<std::vector<Exponent>>;

/// Labeled edge of the diagram V: finite exponent m between u < v.
struct Edge {
  Gen u = 0;
  Gen v = 0;
  long m = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Odd Coxeter system: symmetric matrix, ones on the diagonal, every
/// off-diagonal entry odd >= 3 or infinite. Immutable once validated.
class CoxeterSystem {
 public:
  int rank() const { return rank_; }
  Exponent m(Gen i, Gen j) const;
  bool adjacent(Gen i, Gen j) const { return i != j && m(i, j).finite(); }

  /// Edges of V in (u, v) lexicographic order, u < v.
  std::vector<Edge> edges() const;
  std::vector<Gen> neighbours(Gen i) const;

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  friend CoxeterSystem validate_system(const RawMatrix& raw);
  CoxeterSystem(int rank, std::vector<Exponent> entries)
      : rank_(rank), entries_(std::move(entries)) {}

  int rank_ = 0;
  std::vector<Exponent> entries_;  // row-major rank x rank
};

/// Checks the raw matrix and returns the system. Never normalizes: any
/// violation is an error (NotSymmetric, DiagonalNotOne, EvenOrSmallExponent).
CoxeterSystem validate_system(const RawMatrix& raw);

/// Builds the raw matrix from an edge list (missing pairs are infinite) and
/// validates it. Duplicate edges and self-loops are rejected.
CoxeterSystem system_from_edges(int rank, const std::vector<Edge>& edges);

RawMatrix to_raw(const CoxeterSystem& sys);

/// Star with center 1 and leaves 2..n labeled t[0], t[1], ...
CoxeterSystem star_system(const std::vector<long>& t);
/// Path 1 - 2 - ... - n with labels[i] on the edge (i+1, i+2).
CoxeterSystem path_system(const std::vector<long>& labels);

// Diagrams ------------------------------------------------------------------

/// Diagram V: an edge exactly when the exponent is finite.
struct DiagramV {
  int vertices = 0;
  std::vector<Edge> edges;
};

/// Diagram Gamma: an edge for every pair with m >= 3 (all pairs, for an odd
/// system of rank >= 2); the label is shown when m >= 4, infinity included.
struct DiagramGamma {
  struct LabeledPair {
    Gen u = 0;
    Gen v = 0;
    Exponent m;
    bool labeled = false;
  };
  int vertices = 0;
  std::vector<LabeledPair> edges;
};

DiagramV diagram_v(const CoxeterSystem& sys);
DiagramGamma diagram_gamma(const CoxeterSystem& sys);

// Classification and invariants --------------------------------------------

struct Classification {
  bool odd = false;
  bool connected = false;
  bool tree = false;
  bool in_tw = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const CoxeterSystem& sys);

/// Screens an unvalidated matrix for oddness (every off-diagonal entry odd or
/// infinite). Used before validation when classifying arbitrary input.
bool is_odd_matrix(const RawMatrix& raw);

/// Rank and sorted multiset of finite off-diagonal exponents.
struct SystemInvariant {
  int rank = 0;
  std::vector<long> finite_exponents;

  friend bool operator==(const SystemInvariant&, const SystemInvariant&) = default;
};

SystemInvariant invariants(const CoxeterSystem& sys);

/// Two odd tree systems are isomorphic exactly when rank and exponent
/// multiset agree.
bool decide_isomorphic(const CoxeterSystem& a, const CoxeterSystem& b);

// Star forms ----------------------------------------------------------------

/// Star presentation data: leaf i (2..n) has exponent t(i); leaves with equal
/// exponent form a block A_j of consecutive indices; blocks ascend by exponent.
class StarForm {
 public:
  int rank() const { return rank_; }
  long t(Gen leaf) const;
  const std::vector<long>& t_vector() const { return t_; }  // (t_2, ..., t_n)

  int block_count() const { return static_cast<int>(distinct_.size()); }
  long block_exponent(int block) const { return distinct_[block]; }
  int block_size(int block) const { return multiplicity_[block]; }
  /// Inclusive range of leaves in block `block` (0-based block index).
  std::pair<Gen, Gen> block_range(int block) const;
  int block_of(Gen leaf) const;

  friend bool operator==(const StarForm&, const StarForm&) = default;

 private:
  friend StarForm star_form_of(const CoxeterSystem& sys);
  int rank_ = 0;
  std::vector<long> t_;
  std::vector<long> distinct_;
  std::vector<int> multiplicity_;
};

/// Recognizes a system already in canonical star shape (center 1, leaves
/// 2..n, ascending labels). Throws NotStarForm otherwise.
StarForm star_form_of(const CoxeterSystem& sys);

struct StarGroup {
  CoxeterSystem system;
  StarForm form;
};

StarGroup as_star(const CoxeterSystem& sys);

/// Canonical star realizing an invariant: center 1, leaves sorted ascending.
StarGroup canonical_star(const SystemInvariant& inv);

/// Quotient of a star by identifying generators i and j.
struct MergeResult {
  CoxeterSystem system;
  /// mapping[g - 1] = index of the image of old generator g.
  std::vector<Gen> mapping;
};

MergeResult merge_generators(const StarGroup& star, Gen i, Gen j);

}  // namespace oddcox
