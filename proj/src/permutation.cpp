#include "oddcox/permutation.hpp"

#include <charconv>
#include <numeric>

#include "oddcox/error.hpp"

namespace oddcox {

Permutation::Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || hit[v]) fail(ErrorKind::Parse, "image list is not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  if (a < 1 || b < 1 || a > degree || b > degree) fail(ErrorKind::Parse, "transposition point out of range");
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(ErrorKind::Parse, "expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    for (skip(); pos < text.size() && text[pos] != ')'; skip()) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc() || v < 1 || v > degree) {
        fail(ErrorKind::Parse, "bad point at offset " + std::to_string(pos) + " (degree " + std::to_string(degree) + ")");
      }
      cycle.push_back(v);
      pos = static_cast<std::size_t>(ptr - text.data());
    }
    if (pos >= text.size()) fail(ErrorKind::Parse, "unterminated cycle");
    ++pos;
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    result = result * Permutation(std::move(images));
    skip();
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k + 1)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k] - 1] = static_cast<int>(k + 1);
  return Permutation(std::move(inv));
}

int Permutation::order() const {
  int result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<int>(c.size()));
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start] || (*this)(start) == start) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = (*this)(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) fail(ErrorKind::Parse, "degree mismatch in permutation product");
  std::vector<int> out(a.images_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = b(a.images_[k]);
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& p) {
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

}  // namespace oddcox

namespace oddcox {

std::vector<int> EnumeratedGroup::word_of(std::size_t k) const {
  std::vector<int> out;
  for (; k != 0; k = parent[k]) out.push_back(parent_generator[k]);
  return {out.rbegin(), out.rend()};
}

EnumeratedGroup enumerate_group(const std::vector<Permutation>& generators, int degree, std::size_t cap) {
  EnumeratedGroup g;
  g.elements.push_back(Permutation::identity(degree));
  g.parent.push_back(0);
  g.parent_generator.push_back(-1);
  g.index.emplace(g.elements.front(), 0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Permutation next = g.elements[head] * generators[s];
      if (g.index.count(next)) continue;
      if (g.elements.size() >= cap) {
        fail(ErrorKind::GroupTooLarge, "group has more than " + std::to_string(cap) + " elements");
      }
      g.index.emplace(next, g.elements.size());
      g.elements.push_back(std::move(next));
      g.parent.push_back(head);
      g.parent_generator.push_back(static_cast<int>(s));
    }
  }
  return g;
}

}  // namespace oddcox
