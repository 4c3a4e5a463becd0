#include <doctest.h>

#include <random>

#include "oddcox/error.hpp"
#include "oddcox/oracle.hpp"
#include "oddcox/word.hpp"
#include "oracles.hpp"

using namespace oddcox;

namespace {

std::vector<Word> all_words(int rank, int max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Gen s = 1; s <= rank; ++s) next.push_back(w * Word{s});
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Word random_word(std::mt19937& rng, int rank, int max_length) {
  Word w;
  const int len = std::uniform_int_distribution<int>(0, max_length)(rng);
  for (int k = 0; k < len; ++k) w.push_back(std::uniform_int_distribution<int>(1, rank)(rng));
  return w;
}

}  // namespace

TEST_CASE("word text format") {
  CHECK(to_string(Word{1, 2, 1}) == "1 2 1");
  CHECK(to_string(Word{}) == "e");
  CHECK(parse_word("1 2 1") == Word{1, 2, 1});
  CHECK(parse_word("e") == Word{});
  CHECK(parse_word("") == Word{});
  CHECK_THROWS_AS(parse_word("1 x"), Error);
  CHECK((Word{2} < Word{1, 1}));
  CHECK((Word{1, 2} < Word{2, 1}));
}

TEST_CASE("reduce examples") {
  const WordEngine s3(star_system({3}));
  CHECK(s3.reduce(Word{1, 1}).is_identity());
  CHECK(s3.reduce(Word{2, 1, 2}).word() == Word{1, 2, 1});
  const WordEngine s35(star_system({3, 5}));
  CHECK(s35.reduce(Word{1, 2, 1, 2}).word() == Word{2, 1});
  CHECK_THROWS_AS(s3.reduce(Word{3}), Error);
}

TEST_CASE("equal, multiply and conjugate examples") {
  const WordEngine s3(star_system({3}));
  CHECK(s3.equal(Word{1, 2, 1}, Word{2, 1, 2}));
  CHECK_FALSE(s3.equal(Word{1}, Word{2}));
  const WordEngine s35(star_system({3, 5}));
  CHECK(s35.equal(Word{1, 3, 1, 3, 1}, Word{3, 1, 3, 1, 3}));

  CHECK(s3.multiply(Word{1}, Word{1}).is_identity());
  CHECK(s3.multiply(Word{1, 2}, Word{2, 1}).is_identity());
  CHECK(s3.multiply(Word{1, 2}, Word{1, 2}).word() == Word{2, 1});

  CHECK(s3.conjugate(Word{2}, Word{}).word() == Word{2});
  CHECK(s3.conjugate(Word{1}, Word{1}).word() == Word{1});
  CHECK(s3.conjugate(Word{2}, Word{1}).word() == Word{1, 2, 1});
}

TEST_CASE("descents and support") {
  const WordEngine s3(star_system({3}));
  CHECK(s3.left_descents(Word{}).empty());
  CHECK(s3.left_descents(Word{2, 1}) == std::set<Gen>{2});
  CHECK(s3.left_descents(Word{1, 2, 1}) == std::set<Gen>{1, 2});
  CHECK(s3.support(Word{}).empty());
  CHECK(s3.support(Word{1, 2, 1}) == std::set<Gen>{1, 2});
  const WordEngine s33(star_system({3, 3}));
  CHECK(s33.support(Word{2, 1, 3}) == std::set<Gen>{1, 2, 3});
  CHECK(s33.support(Word{2, 3, 3, 2}).empty());
}

TEST_CASE("orbit budget is enforced") {
  const WordEngine tight(star_system({3, 3}), 2);
  CHECK_THROWS_AS(tight.reduce(Word{1, 2, 1, 3, 1, 2}), Error);
  try {
    tight.reduce(Word{1, 2, 1, 3, 1, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrbitBudgetExceeded);
    CHECK(tag(e.kind()) == "budget");
  }
}

TEST_CASE("rank two equality agrees with the polygon model") {
  for (long m : {3L, 5L}) {
    const WordEngine engine(star_system({m}));
    const oracle::PolygonDihedral d(m);
    const auto words = all_words(2, static_cast<int>(m) + 3);
    std::map<std::vector<long>, CanonicalWord> seen;
    for (const Word& w : words) {
      const CanonicalWord c = engine.reduce(w);
      const auto image = d.evaluate(w);
      auto [it, fresh] = seen.emplace(image, c);
      if (!fresh) CHECK(it->second == c);
    }
    CHECK(seen.size() == static_cast<std::size_t>(2 * m));
    // distinct images have distinct canonical forms
    std::set<CanonicalWord> forms;
    for (const auto& [img, c] : seen) forms.insert(c);
    CHECK(forms.size() == seen.size());
  }
}

TEST_CASE("rank three equality agrees with the geometric representation") {
  for (const auto& t : {std::vector<long>{3, 3}, std::vector<long>{3, 5}}) {
    const CoxeterSystem sys = star_system(t);
    const WordEngine engine(sys);
    const oracle::GeometricRep rep(sys);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const Word a = random_word(rng, 3, 8);
      Word b = random_word(rng, 3, 8);
      if (trial % 3 == 0) b = engine.reduce(a * Word{2, 2}).word();
      CHECK(engine.equal(a, b) == rep.equal(a, b));
    }
  }
}

TEST_CASE("algebraic properties on random words") {
  const WordEngine engine(star_system({3, 5}));
  std::mt19937 rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    const Word w = random_word(rng, 3, 9);
    const Word v = random_word(rng, 3, 9);
    const Word u = random_word(rng, 3, 5);
    const CanonicalWord rw = engine.reduce(w);
    CHECK(engine.reduce(rw.word()) == rw);
    CHECK(engine.multiply(w, w.inverse()).is_identity());
    const CanonicalWord wv = engine.multiply(w, v);
    CHECK(wv.length() <= rw.length() + engine.length(v));
    CHECK((wv.length() + rw.length() + engine.length(v)) % 2 == 0);
    CHECK(engine.multiply(wv.word(), u) == engine.multiply(w, engine.multiply(v, u).word()));
    // canonical form is reduced and least in its orbit
    for (const Word& x : engine.braid_orbit(rw.word())) CHECK_FALSE(x < rw.word());
  }
}

TEST_CASE("involution to base") {
  const WordEngine s3(star_system({3}));
  CHECK(involution_to_base(s3, Word{1}) == Word{});
  const Word x = involution_to_base(s3, Word{2});
  CHECK(s3.conjugate(Word{2}, x).word() == Word{1});
  CHECK(x == Word{2, 1});

  const WordEngine s33(star_system({3, 3}));
  const Word v{2, 1, 3, 1, 2};
  CHECK(s33.conjugate(v, involution_to_base(s33, v)).word() == Word{1});

  CHECK_THROWS_AS(involution_to_base(s3, Word{}), Error);
  CHECK_THROWS_AS(involution_to_base(s3, Word{1, 2}), Error);

  for (const auto& t : {std::vector<long>{3, 3}, std::vector<long>{3, 5}}) {
    const WordEngine engine(star_system(t));
    int involutions = 0;
    for (const CanonicalWord& w : cayley_ball(engine, 6).elements) {
      if (w.is_identity() || !engine.multiply(w.word(), w.word()).is_identity()) continue;
      ++involutions;
      CHECK(w.length() % 2 == 1);
      CHECK(engine.conjugate(w.word(), involution_to_base(engine, w.word())).word() == Word{1});
    }
    CHECK(involutions > 10);
  }
}

TEST_CASE("involution to base on a path") {
  const WordEngine path(path_system({3, 5, 3}));
  for (Gen j = 1; j <= 4; ++j) {
    CHECK(path.conjugate(Word{j}, involution_to_base(path, Word{j})).word() == Word{1});
  }
}

TEST_CASE("dihedral log") {
  const WordEngine s35(star_system({3, 5}));
  CHECK(dihedral_log(s35, 3, Word{}) == DihedralLog{Parity::Even, 0});
  CHECK(dihedral_log(s35, 3, Word{1}) == DihedralLog{Parity::Odd, 0});
  CHECK(dihedral_log(s35, 3, Word{3}) == DihedralLog{Parity::Odd, 1});
  CHECK(dihedral_log(s35, 3, Word{1, 3, 1, 3}) == DihedralLog{Parity::Even, 2});
  CHECK_THROWS_AS(dihedral_log(s35, 3, Word{2}), Error);
  for (long k = 0; k < 5; ++k) {
    const Word odd = Word{1} * Word{1, 3}.power(static_cast<int>(k));
    CHECK(dihedral_log(s35, 3, odd) == DihedralLog{Parity::Odd, k});
  }
}
