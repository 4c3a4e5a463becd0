#include "oddcox/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "oddcox/error.hpp"

namespace oddcox {

bool CayleyBall::contains(const CanonicalWord& w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

CayleyBall cayley_ball(const WordEngine& engine, int radius, std::size_t cap) {
  if (radius < 0) fail(ErrorKind::Parse, "radius must be >= 0");
  const int n = engine.system().rank();
  std::set<CanonicalWord> seen{engine.identity()};
  std::vector<CanonicalWord> layer{engine.identity()};
  for (int r = 1; r <= radius && !layer.empty(); ++r) {
    std::vector<CanonicalWord> next;
    for (const CanonicalWord& u : layer) {
      for (Gen s = 1; s <= n; ++s) {
        CanonicalWord v = engine.append(u, s);
        if (v.length() != static_cast<std::size_t>(r) || seen.count(v)) continue;
        if (seen.size() >= cap) {
          fail(ErrorKind::BallBudgetExceeded, "ball of radius " + std::to_string(radius) + " exceeds " +
                                                  std::to_string(cap) + " elements");
        }
        seen.insert(v);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  CayleyBall ball;
  ball.radius = radius;
  ball.elements.assign(seen.begin(), seen.end());
  return ball;
}

DihedralModel::DihedralModel(long m) : m_(m) {
  if (m < 3 || m % 2 == 0) fail(ErrorKind::EvenOrSmallExponent, "dihedral model needs odd m >= 3");
  const int order = static_cast<int>(2 * m);
  table_.assign(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  // (k1, f1)(k2, f2) = (k1 + (-1)^f1 k2, f1 xor f2), since s r s = r^-1
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const long k1 = a % m, f1 = a / m, k2 = b % m, f2 = b / m;
      const long k = (((k1 + (f1 ? -k2 : k2)) % m) + m) % m;
      table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(k + m * (f1 ^ f2));
    }
  }
}

int DihedralModel::evaluate(const Word& w) const {
  // w_1 = s = (0, 1) and w_2 = s r = r^-1 s = (m - 1, 1).
  const int w1 = static_cast<int>(m_);
  const int w2 = static_cast<int>(m_ - 1 + m_);
  int acc = identity();
  for (Gen g : w) {
    if (g != 1 && g != 2) fail(ErrorKind::InvalidLetter, "dihedral words use letters 1 and 2");
    acc = multiply(acc, g == 1 ? w1 : w2);
  }
  return acc;
}

std::vector<Word> ball_search(const WordEngine& engine, SearchKind kind, const Word& a, const Word& b, int radius,
                              std::size_t cap) {
  const CayleyBall ball = cayley_ball(engine, radius, cap);
  const CanonicalWord target = engine.reduce(kind == SearchKind::Conjugator ? b : a);
  std::vector<Word> out;
  for (const CanonicalWord& x : ball.elements) {
    if (engine.conjugate(a, x.word()) == target) out.push_back(x.word());
  }
  return out;
}

}  // namespace oddcox
