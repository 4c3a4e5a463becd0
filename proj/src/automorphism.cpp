#include "oddcox/automorphism.hpp"

#include <numeric>
#include <string>

#include "oddcox/error.hpp"

namespace oddcox {

namespace {

long inverse_mod(long k, long t) {
  for (long r = 1; r < t; ++r) {
    if ((k * r) % t == 1) return r;
  }
  fail(ErrorKind::BadThetaExponent, std::to_string(k) + " is not a unit mod " + std::to_string(t));
}

}  // namespace

CanonicalWord apply(const WordEngine& engine, const Endomorphism& e, const Word& w) {
  const int n = engine.system().rank();
  if (static_cast<int>(e.images.size()) != n) {
    fail(ErrorKind::InvalidLetter, "endomorphism has " + std::to_string(e.images.size()) + " images, rank is " +
                                       std::to_string(n));
  }
  CanonicalWord acc = engine.identity();
  for (Gen g : w) {
    if (g < 1 || g > n) fail(ErrorKind::InvalidLetter, "letter " + std::to_string(g) + " out of range");
    for (Gen h : e.image(g)) acc = engine.append(acc, h);
  }
  return acc;
}

Endomorphism compose(const WordEngine& engine, const Endomorphism& e1, const Endomorphism& e2) {
  Endomorphism out;
  for (const Word& img : e2.images) out.images.push_back(apply(engine, e1, img).word());
  return out;
}

bool satisfies_relations(const WordEngine& engine, const Endomorphism& e) {
  const CoxeterSystem& sys = engine.system();
  for (Gen i = 1; i <= sys.rank(); ++i) {
    if (!apply(engine, e, Word{i, i}).is_identity()) return false;
  }
  for (const Edge& edge : sys.edges()) {
    const Word relator = alternating(edge.u, edge.v, static_cast<std::size_t>(2 * edge.m));
    if (!apply(engine, e, relator).is_identity()) return false;
  }
  return true;
}

bool same_on_generators(const WordEngine& engine, const Endomorphism& a, const Endomorphism& b) {
  if (a.images.size() != b.images.size()) return false;
  for (std::size_t i = 0; i < a.images.size(); ++i) {
    if (!engine.equal(a.images[i], b.images[i])) return false;
  }
  return true;
}

AutKit::AutKit(StarGroup star, std::size_t orbit_budget)
    : star_(std::move(star)), engine_(star_.system, orbit_budget) {}

void AutKit::check_endo(const Endomorphism& e) const {
  if (static_cast<int>(e.images.size()) != rank()) {
    fail(ErrorKind::InvalidLetter, "endomorphism has " + std::to_string(e.images.size()) + " images, rank is " +
                                       std::to_string(rank()));
  }
  for (const Word& img : e.images) {
    for (Gen g : img) {
      if (g < 1 || g > rank()) fail(ErrorKind::InvalidLetter, "image letter " + std::to_string(g) + " out of range");
    }
  }
}

CanonicalWord AutKit::apply(const Endomorphism& e, const Word& w) const { return oddcox::apply(engine_, e, w); }

bool AutKit::verify(const Endomorphism& e) const {
  check_endo(e);
  for (Gen i = 1; i <= rank(); ++i) {
    if (!apply(e, Word{i, i}).is_identity()) return false;
  }
  for (Gen i = 2; i <= rank(); ++i) {
    const Word relator = alternating(1, i, static_cast<std::size_t>(2 * star_.form.t(i)));
    if (!apply(e, relator).is_identity()) return false;
  }
  return true;
}

Endomorphism AutKit::identity() const {
  Endomorphism e;
  for (Gen i = 1; i <= rank(); ++i) e.images.push_back(Word{i});
  return e;
}

Endomorphism AutKit::inner(const Word& x) const {
  Endomorphism e;
  for (Gen i = 1; i <= rank(); ++i) e.images.push_back(engine_.conjugate(Word{i}, x).word());
  return e;
}

Endomorphism AutKit::theta(Gen leaf, long k) const {
  if (leaf < 2 || leaf > rank()) fail(ErrorKind::BadThetaExponent, "theta needs a leaf, got " + std::to_string(leaf));
  const long t = star_.form.t(leaf);
  if (k < 1 || k >= t || std::gcd(k, t) != 1) {
    fail(ErrorKind::BadThetaExponent, "theta exponent " + std::to_string(k) + " is not a unit in [1, " +
                                          std::to_string(t) + ")");
  }
  Endomorphism e = identity();
  e.images[static_cast<std::size_t>(leaf - 1)] =
      engine_.reduce(Word{1} * Word{1, leaf}.power(static_cast<int>(k))).word();
  return e;
}

void AutKit::check_block_preserving(const Permutation& alpha) const {
  if (alpha.degree() != rank() || alpha(1) != 1) {
    fail(ErrorKind::BlockViolatingPermutation, "permutation must act on 1.." + std::to_string(rank()) + " fixing 1");
  }
  for (Gen i = 2; i <= rank(); ++i) {
    if (star_.form.t(i) != star_.form.t(alpha(i))) {
      fail(ErrorKind::BlockViolatingPermutation,
           "leaf " + std::to_string(i) + " moved to a leaf with a different exponent");
    }
  }
}

Endomorphism AutKit::graph(const Permutation& alpha) const {
  check_block_preserving(alpha);
  Endomorphism e;
  for (Gen i = 1; i <= rank(); ++i) e.images.push_back(Word{alpha(i)});
  return e;
}

Endomorphism AutKit::theta_product(const std::vector<long>& cvec) const {
  if (static_cast<int>(cvec.size()) != rank() - 1) {
    fail(ErrorKind::BadThetaExponent, "cvec needs one entry per leaf");
  }
  // The theta factors act on disjoint leaves and commute; ascending order.
  Endomorphism e = identity();
  for (Gen i = 2; i <= rank(); ++i) e = compose(e, theta(i, cvec[static_cast<std::size_t>(i - 2)]));
  return e;
}

Endomorphism AutKit::compose(const Endomorphism& e1, const Endomorphism& e2) const {
  check_endo(e1);
  check_endo(e2);
  return oddcox::compose(engine_, e1, e2);
}

bool AutKit::same(const Endomorphism& a, const Endomorphism& b) const { return same_on_generators(engine_, a, b); }

std::vector<long> AutKit::unit_cvec() const { return std::vector<long>(static_cast<std::size_t>(rank() - 1), 1); }

std::vector<long> AutKit::minus_one_cvec() const {
  std::vector<long> out;
  for (long t : star_.form.t_vector()) out.push_back(t - 1);
  return out;
}

AutFactorization AutKit::factorize(const Endomorphism& e) const {
  check_endo(e);
  if (!verify(e)) fail(ErrorKind::NotAutomorphism, "images violate the defining relations");

  // (1) conjugate the image of w_1 back to w_1
  const CanonicalWord first = apply(e, Word{1});
  if (first.is_identity()) fail(ErrorKind::NotAutomorphism, "w_1 is sent to the identity");
  const Word x = involution_to_base(engine_, first.word());
  const Endomorphism psi = compose(inner(x), e);
  if (!engine_.equal(psi.image(1), Word{1})) {
    fail(ErrorKind::NoDescentStep, "conjugator does not fix w_1");
  }

  // (2) each leaf must land in a single dihedral parabolic <w_1, w_j> as an
  //     odd element w_1 (w_1 w_j)^k
  const int n = rank();
  std::vector<int> images(static_cast<std::size_t>(n));
  images[0] = 1;
  AutFactorization f;
  f.inner = x;
  for (Gen i = 2; i <= n; ++i) {
    std::set<Gen> leaves = engine_.support(psi.image(i));
    leaves.erase(1);
    if (leaves.size() != 1) {
      fail(ErrorKind::NotAutomorphism, "image of w_" + std::to_string(i) + " is not in a single parabolic <w_1, w_j>");
    }
    const Gen j = *leaves.begin();
    const DihedralLog log = dihedral_log(engine_, j, psi.image(i));
    if (log.parity != Parity::Odd) {
      fail(ErrorKind::NotAutomorphism, "image of w_" + std::to_string(i) + " is not an involution of the parabolic");
    }
    images[static_cast<std::size_t>(i - 1)] = j;
    f.cvec.push_back(log.k);
  }

  // (3) perm must be a block-preserving bijection and each k a unit
  std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
  for (Gen i = 2; i <= n; ++i) {
    const Gen j = images[static_cast<std::size_t>(i - 1)];
    if (hit[j]) fail(ErrorKind::NotAutomorphism, "two leaves land in the parabolic of w_" + std::to_string(j));
    hit[j] = true;
    if (star_.form.t(i) != star_.form.t(j)) {
      fail(ErrorKind::NotAutomorphism, "leaf " + std::to_string(i) + " moved across blocks");
    }
    const long k = f.cvec[static_cast<std::size_t>(i - 2)];
    if (std::gcd(k, star_.form.t(i)) != 1) {
      fail(ErrorKind::NotAutomorphism, "exponent " + std::to_string(k) + " for leaf " + std::to_string(i) +
                                           " is not a unit");
    }
  }
  f.perm = Permutation(std::move(images));

  // (4) the factored form must reproduce e
  if (!same(recompose(f), e)) fail(ErrorKind::NotAutomorphism, "recomposition does not reproduce the input");
  return f;
}

Endomorphism AutKit::recompose(const AutFactorization& f) const {
  return compose(inner(f.inner.inverse()), compose(graph(f.perm), theta_product(f.cvec)));
}

bool AutKit::is_inner(const AutFactorization& f) const {
  return f.perm.is_identity() && (f.cvec == unit_cvec() || f.cvec == minus_one_cvec());
}

NormalityWitness AutKit::normality_witness(const AutFactorization& f) const {
  if (is_inner(f)) fail(ErrorKind::IsInnerNoWitness, "inner automorphisms are normal");
  const Endomorphism phi = recompose(f);
  const int n = rank();

  // Candidates: g = w_1 w_i killed by merging (1, i), then g = w_i w_j killed
  // by merging (i, j). The first whose image stays nontrivial is a witness.
  std::vector<std::pair<Gen, Gen>> candidates;
  for (Gen i = 2; i <= n; ++i) candidates.emplace_back(1, i);
  for (Gen i = 2; i <= n; ++i) {
    for (Gen j = i + 1; j <= n; ++j) candidates.emplace_back(i, j);
  }

  for (const auto& [a, b] : candidates) {
    MergeResult quotient = merge_generators(star_, a, b);
    const WordEngine target(quotient.system, engine_.orbit_budget());
    auto project = [&](const Word& w) {
      std::vector<Gen> letters;
      for (Gen g : w) letters.push_back(quotient.mapping[static_cast<std::size_t>(g - 1)]);
      return target.reduce(Word(std::move(letters)));
    };
    const Word g{a, b};
    if (!project(g).is_identity()) continue;  // g must lie in the kernel
    CanonicalWord evidence = project(apply(phi, g).word());
    if (!evidence.is_identity()) {
      return {g, {a, b}, std::move(evidence), std::move(quotient)};
    }
  }
  fail(ErrorKind::NoWitnessFound, "no merge quotient separates this automorphism from the inner ones");
}

Endomorphism AutKit::try_invert(const Endomorphism& e) const {
  AutFactorization f;
  try {
    f = factorize(e);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NotAutomorphism) throw;
    fail(ErrorKind::NotSurjective, std::string("endomorphism is not onto: ") + err.what());
  }
  std::vector<long> inv_cvec;
  for (Gen i = 2; i <= rank(); ++i) {
    inv_cvec.push_back(inverse_mod(f.cvec[static_cast<std::size_t>(i - 2)], star_.form.t(i)));
  }
  // e = inner(x^-1) graph(a) theta(c)  =>  e^-1 = theta(c^-1) graph(a^-1) inner(x)
  const Endomorphism inverse = compose(theta_product(inv_cvec), compose(graph(f.perm.inverse()), inner(f.inner)));
  if (!same(compose(e, inverse), identity()) || !same(compose(inverse, e), identity())) {
    fail(ErrorKind::NotSurjective, "inverse check failed");
  }
  return inverse;
}

}  // namespace oddcox
