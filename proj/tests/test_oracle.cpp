#include <doctest.h>

#include <algorithm>

#include "oddcox/error.hpp"
#include "oddcox/oracle.hpp"
#include "oracles.hpp"

using namespace oddcox;

TEST_CASE("ball sizes") {
  const WordEngine s3(star_system({3}));
  CHECK(cayley_ball(s3, 0).elements.size() == 1);
  CHECK(cayley_ball(s3, 1).elements.size() == 3);
  CHECK(cayley_ball(s3, 3).elements.size() == 6);
  CHECK(cayley_ball(s3, 5).elements.size() == 6);

  const WordEngine s33(star_system({3, 3}));
  const CayleyBall b2 = cayley_ball(s33, 2);
  CHECK(b2.elements.size() == 10);
  CHECK(b2.contains(s33.reduce(Word{2, 3})));
  CHECK_FALSE(b2.contains(s33.reduce(Word{1, 2, 3})));
}

TEST_CASE("balls match the geometric representation") {
  const std::vector<CoxeterSystem> systems{star_system({3, 3}), star_system({3, 5}), star_system({3, 3, 3}),
                                           path_system({5, 3})};
  for (const CoxeterSystem& sys : systems) {
    const WordEngine engine(sys);
    const oracle::GeometricRep rep(sys);
    std::size_t previous = 0;
    for (int r = 0; r <= 5; ++r) {
      const CayleyBall ball = cayley_ball(engine, r);
      CHECK(ball.elements.size() == rep.ball_size(r));
      CHECK(ball.elements.size() >= previous);
      CHECK(std::is_sorted(ball.elements.begin(), ball.elements.end()));
      previous = ball.elements.size();
    }
  }
}

TEST_CASE("rank two balls fill the dihedral group") {
  for (long m : {3L, 5L, 7L}) {
    const WordEngine engine(star_system({m}));
    CHECK(cayley_ball(engine, static_cast<int>(m)).elements.size() == static_cast<std::size_t>(2 * m));
    CHECK(cayley_ball(engine, static_cast<int>(m) + 1).elements.size() == static_cast<std::size_t>(2 * m));
  }
}

TEST_CASE("ball budget") {
  const WordEngine engine(star_system({3, 3}));
  CHECK_THROWS_AS(cayley_ball(engine, 4, 10), Error);
  try {
    cayley_ball(engine, 4, 10);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BallBudgetExceeded);
  }
  CHECK(cayley_ball(engine, 2, 10).elements.size() == 10);
}

TEST_CASE("dihedral model") {
  for (long m : {3L, 5L, 7L, 9L}) {
    const DihedralModel d(m);
    CHECK(d.order() == static_cast<std::size_t>(2 * m));
    const int n = static_cast<int>(d.order());
    for (int a = 0; a < n; ++a) {
      CHECK(d.multiply(a, d.identity()) == a);
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) CHECK(d.multiply(d.multiply(a, b), c) == d.multiply(a, d.multiply(b, c)));
      }
    }
    CHECK(d.evaluate(Word{1, 1}) == d.identity());
    CHECK(d.evaluate(Word{2, 2}) == d.identity());
    CHECK(d.evaluate(alternating(1, 2, static_cast<std::size_t>(2 * m))) == d.identity());
    CHECK(d.evaluate(alternating(1, 2, static_cast<std::size_t>(m))) == d.evaluate(alternating(2, 1, static_cast<std::size_t>(m))));
    CHECK(d.evaluate(Word{1, 2}) != d.identity());
  }
  // agrees with the polygon action on every word of length <= 6
  const DihedralModel d(5);
  const oracle::PolygonDihedral poly(5);
  std::vector<Word> words{Word{}};
  for (std::size_t k = 0; k < words.size() && words.size() < 127; ++k) {
    if (words[k].size() == 6) continue;
    words.push_back(words[k] * Word{1});
    words.push_back(words[k] * Word{2});
  }
  for (const Word& a : words) {
    for (const Word& b : words) CHECK((d.evaluate(a) == d.evaluate(b)) == (poly.evaluate(a) == poly.evaluate(b)));
  }
}

TEST_CASE("conjugator and centralizer search") {
  const WordEngine s3(star_system({3}));
  const auto conj = ball_search(s3, SearchKind::Conjugator, Word{2}, Word{1}, 3);
  REQUIRE_FALSE(conj.empty());
  CHECK(conj.front().size() == 2);
  for (const Word& x : conj) CHECK(s3.equal(x * Word{2} * x.inverse(), Word{1}));

  const WordEngine s33(star_system({3, 3}));
  const auto cent = ball_search(s33, SearchKind::Centralizer, Word{1}, Word{}, 4);
  CHECK(cent == std::vector<Word>{Word{}, Word{1}});

  CHECK(ball_search(s33, SearchKind::Conjugator, Word{1}, Word{1}, 0) == std::vector<Word>{Word{}});
  CHECK(ball_search(s33, SearchKind::Conjugator, Word{1}, Word{1, 2}, 4).empty());
}
