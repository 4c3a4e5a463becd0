#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oddcox/permutation.hpp"
#include "oddcox/system.hpp"
#include "oddcox/word.hpp"

namespace oddcox {

/// Endomorphism given by generator images: images[i - 1] is the image of w_i.
struct Endomorphism {
  std::vector<Word> images;

  const Word& image(Gen g) const { return images[static_cast<std::size_t>(g - 1)]; }
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

/// Substitutes generator images letter by letter and reduces.
CanonicalWord apply(const WordEngine& engine, const Endomorphism& e, const Word& w);
/// (e1 o e2)(w) = e1(e2(w))
Endomorphism compose(const WordEngine& engine, const Endomorphism& e1, const Endomorphism& e2);
/// Images satisfy every defining relation of the ambient system: squares of
/// generators and (w_i w_j)^m for finite m.
bool satisfies_relations(const WordEngine& engine, const Endomorphism& e);
bool same_on_generators(const WordEngine& engine, const Endomorphism& a, const Endomorphism& b);

/// Factored automorphism e = inner(x^-1) o graph(perm) o theta-product(cvec).
///
/// cvec holds (k_2, ..., k_n) with 1 <= k_i < t_i coprime to t_i; perm acts
/// on {1..n}, fixes 1, and maps every block of equal exponents onto itself.
struct AutFactorization {
  Word inner;
  std::vector<long> cvec;
  Permutation perm;

  friend bool operator==(const AutFactorization&, const AutFactorization&) = default;
};

struct NormalityWitness {
  Word g;                     ///< element of the normal subgroup N
  std::pair<Gen, Gen> merge;  ///< N is the kernel of this merge quotient
  CanonicalWord evidence;     ///< image of phi(g) in the quotient, nontrivial
  MergeResult quotient;
};

/// Automorphism toolkit for a star-form group.
///
/// Composition is (e1 o e2)(w) = e1(e2(w)); inner(x) maps g to x g x^-1.
class AutKit {
 public:
  explicit AutKit(StarGroup star, std::size_t orbit_budget = kDefaultOrbitBudget);

  const StarGroup& star() const { return star_; }
  const WordEngine& engine() const { return engine_; }
  int rank() const { return star_.system.rank(); }

  CanonicalWord apply(const Endomorphism& e, const Word& w) const;
  /// Images satisfy w_i^2 = 1 and (w_1 w_i)^{t_i} = 1 for every leaf.
  bool verify(const Endomorphism& e) const;

  Endomorphism identity() const;
  Endomorphism inner(const Word& x) const;
  Endomorphism theta(Gen leaf, long k) const;
  /// `alpha` is a permutation of {1..n} fixing 1 and preserving blocks.
  Endomorphism graph(const Permutation& alpha) const;
  /// Product of theta(i, k_i) in ascending leaf order.
  Endomorphism theta_product(const std::vector<long>& cvec) const;

  Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2) const;
  /// Generatorwise equality via the word problem.
  bool same(const Endomorphism& a, const Endomorphism& b) const;

  /// Throws NotAutomorphism when e is not an automorphism.
  AutFactorization factorize(const Endomorphism& e) const;
  Endomorphism recompose(const AutFactorization& f) const;
  bool is_inner(const AutFactorization& f) const;

  /// For non-inner f: an element g of a merge kernel N with phi(g) outside N.
  NormalityWitness normality_witness(const AutFactorization& f) const;

  /// Inverse automorphism, or NotSurjective if e does not factorize.
  Endomorphism try_invert(const Endomorphism& e) const;

  /// all-1 cvec (identity factor of C)
  std::vector<long> unit_cvec() const;
  /// cvec of inner(w_1): k_i = t_i - 1
  std::vector<long> minus_one_cvec() const;

 private:
  void check_endo(const Endomorphism& e) const;
  void check_block_preserving(const Permutation& alpha) const;

  StarGroup star_;
  WordEngine engine_;
};

}  // namespace oddcox
