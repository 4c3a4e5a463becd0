#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace oddcox {

/// Bijection of {1, ..., degree}.
///
/// Products follow the left-to-right convention used for words: (a * b)
/// applies a first, then b. With it, the image of a word under y_i -> (i i+1)
/// is the product of its letters in reading order.
class Permutation {
 public:
  explicit Permutation(int degree = 0);
  /// images[k] is the image of k + 1. Throws Parse unless bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation transposition(int degree, int a, int b);
  /// Parses cycle notation such as "(1 3 4)(2 5)"; "()" is the identity.
  static Permutation parse(std::string_view cycles, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  int order() const;
  std::vector<std::vector<int>> cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Elements of the group generated by `generators`, in breadth-first order
/// from the identity with generators tried in order. The discovery tree gives
/// every element a ShortLex-least word: element k is element parent[k] times
/// generator parent_generator[k] (0-based), and element 0 is the identity.
struct EnumeratedGroup {
  std::vector<Permutation> elements;
  std::vector<std::size_t> parent;
  std::vector<int> parent_generator;
  std::map<Permutation, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  /// 0-based generator indices spelling element k.
  std::vector<int> word_of(std::size_t k) const;
};

/// Throws GroupTooLarge when the group exceeds `cap` elements.
EnumeratedGroup enumerate_group(const std::vector<Permutation>& generators, int degree, std::size_t cap);

/// Cycle notation with each cycle starting at its least point; "()" for the
/// identity.
std::string to_string(const Permutation& p);

}  // namespace oddcox
