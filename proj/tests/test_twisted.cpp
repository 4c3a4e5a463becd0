#include <doctest.h>

#include <set>

#include "oddcox/error.hpp"
#include "oddcox/twisted.hpp"

using namespace oddcox;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Internal;
}

Permutation P(const char* cycles, int degree) { return Permutation::parse(cycles, degree); }

// Naive count: close the group under products, extend phi along words, and
// merge x with g x phi(g)^-1 for every g until nothing changes.
long naive_count(const std::vector<Permutation>& gens, const std::vector<Permutation>& images) {
  const int degree = gens.front().degree();
  std::map<Permutation, Permutation> phi{{Permutation::identity(degree), Permutation::identity(degree)}};
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = phi;
    for (const auto& [g, pg] : snapshot) {
      for (std::size_t s = 0; s < gens.size(); ++s) grew |= phi.emplace(g * gens[s], pg * images[s]).second;
    }
  }
  std::vector<std::set<Permutation>> classes;
  std::set<Permutation> done;
  for (const auto& [x, unused] : phi) {
    if (done.count(x)) continue;
    std::set<Permutation> cls{x};
    for (bool grew = true; grew;) {
      grew = false;
      const auto snapshot = cls;
      for (const auto& y : snapshot) {
        for (const auto& [g, pg] : phi) grew |= cls.insert(g * y * pg.inverse()).second;
      }
    }
    done.insert(cls.begin(), cls.end());
    classes.push_back(cls);
  }
  return static_cast<long>(classes.size());
}

}  // namespace

TEST_CASE("twisted classes of S_3") {
  const std::vector<Permutation> gens{P("(1 2)", 3), P("(2 3)", 3)};
  CHECK(twisted_count(gens, gens) == 3);
  // conjugation by (1 2)
  const Permutation c = P("(1 2)", 3);
  std::vector<Permutation> conj;
  for (const auto& g : gens) conj.push_back(c * g * c);
  CHECK(twisted_count(gens, conj) == 3);
}

TEST_CASE("twisted classes by table") {
  std::vector<int> inversion{0, 2, 1};
  CHECK(twisted_count(cyclic_table(3), inversion) == 1);
  CHECK(twisted_count(cyclic_table(5), std::vector<int>{0, 1, 2, 3, 4}) == 5);
  CHECK(twisted_count(cyclic_table(4), std::vector<int>{0, 3, 2, 1}) == 2);
  CHECK(twisted_count(cyclic_table(5), std::vector<int>{0, 2, 4, 1, 3}) == 1);
}

TEST_CASE("generator route agrees with the naive count") {
  const std::vector<Permutation> s4{P("(1 2)", 4), P("(2 3)", 4), P("(3 4)", 4)};
  CHECK(twisted_count(s4, s4) == naive_count(s4, s4));
  const Permutation c = P("(1 2 3 4)", 4);
  std::vector<Permutation> conj;
  for (const auto& g : s4) conj.push_back(c.inverse() * g * c);
  CHECK(twisted_count(s4, conj) == naive_count(s4, conj));
  CHECK(twisted_count(s4, conj) == 5);

  // D_8 on a square with the outer automorphism swapping reflection classes
  const std::vector<Permutation> d8{P("(1 2 3 4)", 4), P("(1 3)", 4)};
  const std::vector<Permutation> outer{P("(1 4 3 2)", 4), P("(1 2)(3 4)", 4)};
  CHECK(twisted_count(d8, outer) == naive_count(d8, outer));
}

TEST_CASE("twisted count rejects bad input") {
  const std::vector<Permutation> gens{P("(1 2)", 3), P("(2 3)", 3)};
  const std::vector<Permutation> collapse{P("(1 2)", 3), P("(1 2)", 3)};
  CHECK(kind_of([&] { twisted_count(gens, collapse); }) == ErrorKind::NotBijectiveHom);
  const std::vector<Permutation> not_hom{P("(1 2)", 3), P("(1 2 3)", 3)};
  CHECK(kind_of([&] { twisted_count(gens, not_hom); }) == ErrorKind::NotBijectiveHom);
  CHECK(kind_of([&] { twisted_count(gens, gens, 4); }) == ErrorKind::GroupTooLarge);
  CHECK(kind_of([] { twisted_count(cyclic_table(3), std::vector<int>{0, 0, 0}); }) == ErrorKind::NotBijectiveHom);
  CHECK(kind_of([] { twisted_count(cyclic_table(3), std::vector<int>{1, 2, 0}); }) == ErrorKind::NotBijectiveHom);
}
