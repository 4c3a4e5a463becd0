#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddcox/system.hpp"

namespace oddcox {

/// Finite sequence of generator indices. The inverse of a word is its
/// reversal since every generator is an involution.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Gen> letters) : letters_(letters) {}
  explicit Word(std::vector<Gen> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Gen operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Gen>& letters() const { return letters_; }

  void push_back(Gen g) { letters_.push_back(g); }
  Word inverse() const { return Word(std::vector<Gen>(letters_.rbegin(), letters_.rend())); }
  Word power(int k) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  /// ShortLex: shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Gen> letters_;
};

/// Space-separated 1-based indices; the empty word is "e".
std::string to_string(const Word& w);
/// Inverse of to_string. Throws Parse on malformed input.
Word parse_word(std::string_view text);

/// Alternating word s t s t ... of the given length.
Word alternating(Gen s, Gen t, std::size_t length);

/// ShortLex-least reduced word of an element. Only the word engine makes
/// these, so holding one means the letters are already canonical.
class CanonicalWord {
 public:
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
  friend auto operator<=>(const CanonicalWord& a, const CanonicalWord& b) { return a.word_ <=> b.word_; }

 private:
  friend class WordEngine;
  explicit CanonicalWord(Word w) : word_(std::move(w)) {}
  Word word_;
};

inline constexpr std::size_t kDefaultOrbitBudget = 1'000'000;

/// Word problem for a Coxeter system by braid-move rewriting.
///
/// A word is reduced iff no sequence of braid moves exposes an adjacent equal
/// pair. reduce() walks the word left to right keeping a canonical prefix; each
/// new letter either extends it or, after braid moves, cancels against it.
/// Every intermediate orbit is explored breadth-first and capped by the
/// orbit budget (OrbitBudgetExceeded, never a truncated answer).
///
/// Conjugation convention: conjugate(v, x) = x v x^-1, and the inner
/// automorphism of x is g -> x g x^-1 everywhere in this library.
class WordEngine {
 public:
  explicit WordEngine(CoxeterSystem sys, std::size_t orbit_budget = kDefaultOrbitBudget);

  const CoxeterSystem& system() const { return sys_; }
  std::size_t orbit_budget() const { return budget_; }

  CanonicalWord reduce(const Word& w) const;
  bool equal(const Word& a, const Word& b) const;
  CanonicalWord multiply(const Word& a, const Word& b) const;
  CanonicalWord conjugate(const Word& v, const Word& x) const;
  std::size_t length(const Word& w) const { return reduce(w).length(); }

  /// { s : l(s w) < l(w) }
  std::set<Gen> left_descents(const Word& w) const;
  /// Letter set of the canonical form.
  std::set<Gen> support(const Word& w) const;

  /// Canonical form of u * s for canonical u.
  CanonicalWord append(const CanonicalWord& u, Gen s) const;

  CanonicalWord identity() const { return CanonicalWord(Word{}); }

  /// All words braid-equivalent to w (same length). Exposed for tests.
  std::vector<Word> braid_orbit(const Word& w) const;

 private:
  void check_letters(const Word& w) const;

  CoxeterSystem sys_;
  std::size_t budget_;
  std::vector<long> exponent_;  // row-major, 0 for infinity (internal only)
};

// Involution and dihedral primitives -----------------------------------------

/// x with x v x^-1 = w_1 for a nontrivial involution v of an odd tree system.
///
/// Strips conjugating generators while some s gives l(s v s) = l(v) - 2, then
/// moves the remaining generator w_j to w_1 along the tree path with dihedral
/// shifts (w_a w_b)^((m-1)/2), which conjugate w_a to w_b.
Word involution_to_base(const WordEngine& engine, const Word& v);

enum class Parity { Even, Odd };

struct DihedralLog {
  Parity parity = Parity::Even;
  long k = 0;

  friend bool operator==(const DihedralLog&, const DihedralLog&) = default;
};

/// Writes an element of <w_1, w_j> as (w_1 w_j)^k or w_1 (w_1 w_j)^k.
DihedralLog dihedral_log(const WordEngine& engine, Gen j, const Word& w);

}  // namespace oddcox
