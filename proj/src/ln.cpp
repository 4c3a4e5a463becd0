#include "oddcox/ln.hpp"

#include <numeric>
#include <string>

#include "oddcox/error.hpp"

namespace oddcox {

CoxeterSystem build_ln(int n) {
  if (n < 2) fail(ErrorKind::RankTooSmall, "L_n needs n >= 2, got " + std::to_string(n));
  return path_system(std::vector<long>(static_cast<std::size_t>(n - 2), 3));
}

Permutation pi_image(int n, const Word& w) {
  if (n < 2) fail(ErrorKind::RankTooSmall, "L_n needs n >= 2, got " + std::to_string(n));
  Permutation p = Permutation::identity(n);
  for (Gen g : w) {
    if (g < 1 || g > n - 1) {
      fail(ErrorKind::BadLetter, "letter " + std::to_string(g) + " outside 1.." + std::to_string(n - 1));
    }
    p = p * Permutation::transposition(n, g, g + 1);
  }
  return p;
}

bool is_pure(int n, const Word& w) { return pi_image(n, w).is_identity(); }

namespace {

FreeWord power_of(int generator, long k) { return FreeWord(static_cast<std::size_t>(k), generator); }

bool all_edges_at_one(const CoxeterSystem& sys) {
  for (const Edge& e : sys.edges()) {
    if (e.u != 1) return false;
  }
  return true;
}

bool is_path(const CoxeterSystem& sys) {
  for (const Edge& e : sys.edges()) {
    if (e.v != e.u + 1) return false;
  }
  return true;
}

}  // namespace

CommutatorPresentation commutator_presentation(const CoxeterSystem& sys) {
  if (!classify(sys).in_tw) fail(ErrorKind::NotInTW, "commutator presentation needs an odd tree system");
  const int n = sys.rank();
  CommutatorPresentation out;

  if (all_edges_at_one(sys)) {
    // a_i = w_1 w_i, and w_1 a_i w_1 = w_i w_1 = a_i^-1
    out.conjugator = 1;
    for (Gen i = 2; i <= n; ++i) {
      const int g = ++out.presentation.generators;
      out.presentation.names.push_back("a" + std::to_string(i));
      out.presentation.relators.push_back(power_of(g, sys.m(1, i).value()));
      out.generator_words.push_back(Word{1, i});
      out.action.push_back({-g});
    }
    return out;
  }
  if (!is_path(sys)) {
    fail(ErrorKind::UnsupportedForm, "commutator presentation supports star (center 1) and path forms only");
  }

  // x_i = y_i y_{i+1}; z = y_2 acts by x_1 -> x_1^-1, x_2 -> x_2^-1 and
  // x_j -> (x_2 ... x_{j-1}) x_j^-1 (x_2 ... x_{j-1})^-1 for j >= 3.
  out.conjugator = 2;
  for (Gen i = 1; i <= n - 1; ++i) {
    const int g = ++out.presentation.generators;
    out.presentation.names.push_back("x" + std::to_string(i));
    out.presentation.relators.push_back(power_of(g, sys.m(i, i + 1).value()));
    out.generator_words.push_back(Word{i, i + 1});
    if (i <= 2) {
      out.action.push_back({-g});
      continue;
    }
    FreeWord prefix;
    for (int k = 2; k < i; ++k) prefix.push_back(k);
    FreeWord image = prefix;
    image.push_back(-g);
    const FreeWord back = free_inverse(prefix);
    image.insert(image.end(), back.begin(), back.end());
    out.action.push_back(std::move(image));
  }
  return out;
}

KernelPresentation rs_kernel(const CoxeterSystem& sys, const std::vector<Permutation>& images,
                             std::size_t image_cap) {
  const int n = sys.rank();
  if (static_cast<int>(images.size()) != n || n == 0) {
    fail(ErrorKind::NotAHomomorphism, "need one image per generator (" + std::to_string(n) + ")");
  }
  const int degree = images.front().degree();
  for (const Permutation& p : images) {
    if (p.degree() != degree) fail(ErrorKind::NotAHomomorphism, "images act on different degrees");
  }

  // Coxeter relators as positive words in the generators.
  std::vector<std::vector<int>> relators;
  for (Gen i = 1; i <= n; ++i) relators.push_back({i, i});
  for (const Edge& e : sys.edges()) {
    std::vector<int> r;
    for (long k = 0; k < e.m; ++k) {
      r.push_back(e.u);
      r.push_back(e.v);
    }
    relators.push_back(std::move(r));
  }
  for (const auto& r : relators) {
    Permutation p = Permutation::identity(degree);
    for (int g : r) p = p * images[static_cast<std::size_t>(g - 1)];
    if (!p.is_identity()) fail(ErrorKind::NotAHomomorphism, "a defining relator maps to " + to_string(p));
  }

  EnumeratedGroup group;
  try {
    group = enumerate_group(images, degree, image_cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GroupTooLarge) throw;
    fail(ErrorKind::ImageTooLarge, e.what());
  }
  const std::size_t cosets = group.size();

  // Schreier generator for (coset c, letter i) is t_c y_i t_{c.i}^-1; it is
  // freely trivial exactly on the edges of the ShortLex spanning tree.
  std::vector<std::size_t> target(cosets * static_cast<std::size_t>(n));
  std::vector<int> schreier(cosets * static_cast<std::size_t>(n), 0);
  KernelPresentation out;
  out.index = cosets;
  for (std::size_t c = 0; c < cosets; ++c) {
    for (int i = 0; i < n; ++i) {
      const std::size_t d = group.index.at(group.elements[c] * images[static_cast<std::size_t>(i)]);
      const std::size_t slot = c * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
      target[slot] = d;
      const bool tree_edge = d != 0 && group.parent[d] == c && group.parent_generator[d] == i;
      if (!tree_edge) schreier[slot] = ++out.schreier_generators;
    }
  }

  FinitePresentation raw;
  raw.generators = out.schreier_generators;
  for (std::size_t c = 0; c < cosets; ++c) {
    for (const auto& r : relators) {
      FreeWord rewritten;
      std::size_t at = c;
      for (int g : r) {
        const std::size_t slot = at * static_cast<std::size_t>(n) + static_cast<std::size_t>(g - 1);
        if (schreier[slot]) rewritten.push_back(schreier[slot]);
        at = target[slot];
      }
      raw.relators.push_back(std::move(rewritten));
    }
  }
  out.presentation = tietze_simplify(std::move(raw));
  return out;
}

long free_rank(const CoxeterSystem& sys, long index) {
  const SystemInvariant inv = invariants(sys);
  if (index < 1) fail(ErrorKind::NonIntegerResult, "index must be positive");
  // Scale by L = 2 lcm(m) so that chi * L is an integer.
  long lcm = 1;
  for (long m : inv.finite_exponents) lcm = std::lcm(lcm, m);
  const long scale = 2 * lcm;
  long sum = 0;
  for (long m : inv.finite_exponents) sum += scale / m;
  const long chi_scaled = (sum - static_cast<long>(inv.rank - 2) * scale) / 2;
  const long numerator = scale - index * chi_scaled;
  if (numerator % scale != 0) {
    fail(ErrorKind::NonIntegerResult, "1 - index * chi = " + std::to_string(numerator) + "/" + std::to_string(scale));
  }
  return numerator / scale;
}

PlWitness pl_witness(int n) {
  if (n < 4) fail(ErrorKind::RankTooSmall, "witness needs n >= 4, got " + std::to_string(n));
  const WordEngine engine(build_ln(n));
  Endomorphism phi;
  for (Gen i = 1; i <= n - 1; ++i) phi.images.push_back(Word{i});
  phi.images[0] = Word{2, 1, 2};
  if (!satisfies_relations(engine, phi)) fail(ErrorKind::Internal, "witness map violates the braid relations");
  for (Gen i = 1; i <= n - 1; ++i) {
    if (!engine.equal(apply(engine, phi, phi.image(i)).word(), Word{i})) {
      fail(ErrorKind::Internal, "witness map is not an involution");
    }
  }
  // g = (x_1 x_2)^2 with x_i = y_i y_{i+1}
  const Word g{1, 2, 2, 3, 1, 2, 2, 3};
  if (!is_pure(n, g)) fail(ErrorKind::Internal, "(x_1 x_2)^2 is not pure");
  CanonicalWord phi_g = apply(engine, phi, g);
  Permutation image = pi_image(n, phi_g.word());
  return {std::move(phi), g, std::move(phi_g), std::move(image)};
}

}  // namespace oddcox
