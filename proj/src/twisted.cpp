#include "oddcox/twisted.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "oddcox/error.hpp"

namespace oddcox {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
      --classes_;
    }
  }

  long classes() const { return static_cast<long>(parent_.size()) + classes_; }

 private:
  std::vector<std::size_t> parent_;
  long classes_ = 0;  // minus the number of merges
};

}  // namespace

CayleyTable cyclic_table(int m) {
  CayleyTable t;
  t.table.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
  }
  return t;
}

long twisted_count(const CayleyTable& group, const std::vector<int>& phi) {
  const std::size_t n = group.size();
  if (n > kDefaultGroupCap) fail(ErrorKind::GroupTooLarge, "table has " + std::to_string(n) + " elements");
  if (phi.size() != n) fail(ErrorKind::NotBijectiveHom, "map must give an image for every element");
  std::vector<bool> hit(n, false);
  for (int v : phi) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)]) {
      fail(ErrorKind::NotBijectiveHom, "map is not a bijection");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
  auto mul = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(group.table[a][b]); };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (static_cast<std::size_t>(phi[mul(a, b)]) !=
          mul(static_cast<std::size_t>(phi[a]), static_cast<std::size_t>(phi[b]))) {
        fail(ErrorKind::NotBijectiveHom, "map is not a homomorphism");
      }
    }
  }
  std::vector<std::size_t> inverse(n, n);
  std::size_t identity = n;
  for (std::size_t a = 0; a < n && identity == n; ++a) {
    bool is_id = true;
    for (std::size_t b = 0; b < n && is_id; ++b) is_id = mul(a, b) == b;
    if (is_id) identity = a;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(a, b) == identity) inverse[a] = b;
    }
  }
  UnionFind uf(n);
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t right = inverse[static_cast<std::size_t>(phi[g])];
    for (std::size_t x = 0; x < n; ++x) uf.unite(x, mul(mul(g, x), right));
  }
  return uf.classes();
}

long twisted_count(const std::vector<Permutation>& generators, const std::vector<Permutation>& images,
                   std::size_t cap) {
  if (generators.empty() || generators.size() != images.size()) {
    fail(ErrorKind::NotBijectiveHom, "need one image per generator");
  }
  const int degree = generators.front().degree();
  for (const auto& p : generators) {
    if (p.degree() != degree) fail(ErrorKind::NotBijectiveHom, "generators act on different degrees");
  }
  for (const auto& p : images) {
    if (p.degree() != degree) fail(ErrorKind::NotBijectiveHom, "images act on a different degree");
  }
  const EnumeratedGroup group = enumerate_group(generators, degree, cap);
  const std::size_t n = group.size();

  // phi along the spanning tree, then every edge must agree.
  std::vector<Permutation> phi(n);
  phi[0] = Permutation::identity(degree);
  for (std::size_t k = 1; k < n; ++k) {
    phi[k] = phi[group.parent[k]] * images[static_cast<std::size_t>(group.parent_generator[k])];
  }
  std::vector<std::size_t> phi_index(n);
  std::vector<bool> hit(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const auto it = group.index.find(phi[k]);
    if (it == group.index.end()) fail(ErrorKind::NotBijectiveHom, "image leaves the group");
    if (hit[it->second]) fail(ErrorKind::NotBijectiveHom, "map is not injective");
    hit[it->second] = true;
    phi_index[k] = it->second;
    for (std::size_t s = 0; s < generators.size(); ++s) {
      const std::size_t next = group.index.at(group.elements[k] * generators[s]);
      if (phi[next] != phi[k] * images[s]) fail(ErrorKind::NotBijectiveHom, "generator images do not define a homomorphism");
    }
  }

  // Orbits under the generators suffice: x ~ s x phi(s)^-1.
  UnionFind uf(n);
  for (std::size_t s = 0; s < generators.size(); ++s) {
    const Permutation right = images[s].inverse();
    for (std::size_t x = 0; x < n; ++x) {
      uf.unite(x, group.index.at(generators[s] * group.elements[x] * right));
    }
  }
  return uf.classes();
}

}  // namespace oddcox
