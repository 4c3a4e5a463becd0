#pragma once

#include <cstddef>
#include <vector>

#include "oddcox/automorphism.hpp"
#include "oddcox/permutation.hpp"
#include "oddcox/presentation.hpp"
#include "oddcox/system.hpp"
#include "oddcox/word.hpp"

namespace oddcox {

/// L_n: path y_1 - ... - y_{n-1} with every label 3 (rank n - 1).
CoxeterSystem build_ln(int n);

/// pi(y_i) = (i i+1), leftmost letter applied first.
Permutation pi_image(int n, const Word& w);
bool is_pure(int n, const Word& w);

/// Presentation of the commutator subgroup W' plus the action of the odd
/// generator used to describe it.
struct CommutatorPresentation {
  FinitePresentation presentation;
  /// Coxeter word of each generator of the presentation.
  std::vector<Word> generator_words;
  /// Generator of W conjugating W' (w_1 for a star, y_2 for a path).
  Gen conjugator = 0;
  /// action[i] = conjugator * generator_{i+1} * conjugator, as a free word.
  std::vector<FreeWord> action;
};

/// Star form: a_i = w_1 w_i with relators a_i^{t_i}. Path form: x_i = y_i
/// y_{i+1} with relators x_i^{m_i}. Throws NotInTW, or UnsupportedForm for
/// trees that are neither.
CommutatorPresentation commutator_presentation(const CoxeterSystem& sys);

/// Reidemeister-Schreier presentation of the kernel of w_i -> images[i-1].
struct KernelPresentation {
  std::size_t index = 0;             ///< order of the image group
  int schreier_generators = 0;       ///< before simplification
  FinitePresentation presentation;   ///< after Tietze simplification
};

inline constexpr std::size_t kDefaultImageCap = 100'000;

KernelPresentation rs_kernel(const CoxeterSystem& sys, const std::vector<Permutation>& images,
                             std::size_t image_cap = kDefaultImageCap);

/// 1 - index * chi(W) with chi(W) = (sum 1/m - (n - 2)) / 2, exactly.
/// Throws NonIntegerResult when the value is not an integer.
long free_rank(const CoxeterSystem& sys, long index);

/// Automorphism x_1 -> x_1^-1 (y_1 -> y_2 y_1 y_2, other y_i fixed) of L_n
/// and the pure element g = (x_1 x_2)^2 it moves out of PL_n.
struct PlWitness {
  Endomorphism endo;
  Word g;
  CanonicalWord phi_g;
  Permutation image;  ///< pi(phi(g)), not the identity
};

PlWitness pl_witness(int n);

}  // namespace oddcox
