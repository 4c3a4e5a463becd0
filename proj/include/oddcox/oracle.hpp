#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oddcox/system.hpp"
#include "oddcox/word.hpp"

namespace oddcox {

inline constexpr std::size_t kDefaultBallCap = 100'000;

/// Every element of length <= radius, sorted ShortLex.
struct CayleyBall {
  int radius = 0;
  std::vector<CanonicalWord> elements;

  bool contains(const CanonicalWord& w) const;
};

/// Breadth-first ball with canonical-form deduplication. Throws
/// BallBudgetExceeded when more than `cap` elements would be produced.
CayleyBall cayley_ball(const WordEngine& engine, int radius, std::size_t cap = kDefaultBallCap);

/// Dihedral group of order 2m as pairs (k, f) meaning r^k s^f with r = w_1 w_2
/// and s = w_1. Elements are numbered k + m f.
class DihedralModel {
 public:
  explicit DihedralModel(long m);

  long m() const { return m_; }
  std::size_t order() const { return static_cast<std::size_t>(2 * m_); }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  int identity() const { return 0; }
  /// Image of a word over {1, 2}.
  int evaluate(const Word& w) const;

 private:
  long m_;
  std::vector<std::vector<int>> table_;
};

enum class SearchKind { Conjugator, Centralizer };

/// conjugator(a, b): every x in the ball with x a x^-1 = b.
/// centralizer(a): every x in the ball with x a x^-1 = a. ShortLex order.
std::vector<Word> ball_search(const WordEngine& engine, SearchKind kind, const Word& a, const Word& b, int radius,
                              std::size_t cap = kDefaultBallCap);

}  // namespace oddcox
